#pragma once

// The slope function sigma_f, computed from spin mirror crossings.

#include "netmap/pullback.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace netmap {

struct ZigzagTrace {
    Slope slope;
    IntVec2 v;
    IntVec2 w;
    std::vector<IntVec2> midpoints;  // lambda_0 .. lambda_{n+1}
    IntVec2 delta;
    Slope result;
};

// First admissible segment; see segment_candidates for the full ordered list.
std::pair<IntVec2, IntVec2> find_segment(const NetMapPresentation& p, const Slope& slope);

// Segments [v, w] on lines of the given slope whose endpoints lie over P2
// with no point over P1 u P2 strictly between. Lines start at the preimage
// table representatives whose coset number is c2 or c3, in table order.
std::vector<std::pair<IntVec2, IntVec2>> segment_candidates(const NetMapPresentation& p, const Slope& slope);

// Midpoint of the mirror translate that ends at v (v over P2).
IntVec2 mirror_midpoint_at(const NetMapPresentation& p, const IntVec2& v);

// lambda_0, the midpoints of mirrors crossing the open segment (v, w) in order, lambda_{n+1}.
std::vector<IntVec2> mirror_crossings(const NetMapPresentation& p, const IntVec2& v, const IntVec2& w);

// Midpoints of mirror translates crossing the open segment (a, b), in order.
// Endpoints may be arbitrary rational points.
std::vector<IntVec2> crossing_midpoints(const NetMapPresentation& p, const QVec2& a, const QVec2& b);

ZigzagTrace sigma_trace(const NetMapPresentation& p, const Slope& slope);
Slope sigma(const NetMapPresentation& p, const Slope& slope);

// Independent evaluation for the bundled main example only.
Slope sigma_main_closed_form(const Slope& slope);

struct Orbit {
    std::vector<Slope> trajectory;
    std::optional<std::pair<std::size_t, std::size_t>> cycle;  // start index, length
};

Orbit orbit(const NetMapPresentation& p, const Slope& start, std::size_t max_iter);

} // namespace netmap
