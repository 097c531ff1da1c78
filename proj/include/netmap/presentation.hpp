#pragma once

// Lattice presentations of NET maps: the pair of lattices, postcritical
// cosets, spin mirrors and the correspondence basis of Lambda1.

#include "netmap/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netmap {

struct QVec2 {
    Q x;
    Q y;

    friend bool operator==(const QVec2&, const QVec2&) = default;
    QVec2 operator+(const QVec2& o) const { return {x + o.x, y + o.y}; }
    QVec2 operator-(const QVec2& o) const { return {x - o.x, y - o.y}; }
    static QVec2 of(const IntVec2& v) { return {Q(v.x), Q(v.y)}; }
};

std::string to_string(const QVec2& v);

struct MirrorArc {
    IntVec2 midpoint;
    // Points after the midpoint, ending in Lambda2. Empty for a degenerate mirror.
    std::vector<QVec2> half_path;

    bool degenerate() const { return half_path.empty(); }
    IntVec2 terminal() const;
    // The whole arc: the half path rotated by 180 degrees about the midpoint,
    // reversed, then the midpoint, then the half path.
    std::vector<QVec2> full() const;
};

struct NetMapPresentation {
    std::string name;
    Basis2 lambda1;
    std::array<IntVec2, 4> postcritical;
    std::array<MirrorArc, 4> mirrors;
    Basis2 correspondence;
};

enum class CosetTag { P1andP2, P1only, P2only };
const char* to_string(CosetTag t);

struct CosetEntry {
    IntVec2 rep;
    CosetTag tag;
};

NetMapPresentation parse_presentation(const std::string& text);
NetMapPresentation load_presentation(const std::string& path);
std::string serialize(const NetMapPresentation& p);

// Throws ValidationError naming the first violated invariant.
void validate(const NetMapPresentation& p);

i64 degree(const NetMapPresentation& p);
bool is_euclidean(const NetMapPresentation& p);
std::vector<CosetEntry> preimage_coset_table(const NetMapPresentation& p);

// Closed-segment intersection with rational endpoints.
bool segments_intersect(const QVec2& a, const QVec2& b, const QVec2& c, const QVec2& d);

} // namespace netmap
