#pragma once

// Exact planar helpers over scaled integer coordinates.

#include "netmap/lattice.hpp"

#include <vector>

namespace netmap::detail {

struct P128 {
    i128 x = 0;
    i128 y = 0;
    P128 operator-(const P128& o) const { return {x - o.x, y - o.y}; }
    P128 operator+(const P128& o) const { return {x + o.x, y + o.y}; }
    bool operator==(const P128& o) const { return x == o.x && y == o.y; }
};

inline i128 cross(const P128& a, const P128& b) { return a.x * b.y - a.y * b.x; }
inline i128 dot(const P128& a, const P128& b) { return a.x * b.x + a.y * b.y; }
inline int orient(const P128& a, const P128& b, const P128& c) { return sign_of(cross(b - a, c - a)); }

// Closed segments [a,b] and [c,d] share a point.
bool segments_touch(const P128& a, const P128& b, const P128& c, const P128& d);

// All (i, j) such that L * (i*E.u + j*E.v) lies in the convex hull of pts.
// pts are already multiplied by L.
std::vector<IntVec2> lattice_points_in_hull(const Basis2& E, i64 L, const std::vector<P128>& pts);

} // namespace netmap::detail
