#pragma once

// Pullback data for a single slope: degrees, coset numbers and component counts.

#include "netmap/presentation.hpp"

#include <array>

namespace netmap {

struct PullbackSummary {
    Slope slope;
    i64 d = 1;
    i64 d_prime = 1;
    std::array<i64, 4> coset_numbers{};
    i64 essential = 0;
    i64 peripheral = 0;
    i64 null_homotopic = 0;
    Q multiplier{0};
};

// Least c >= 0 with c = +-(p*r - q*s) mod 2*d_prime, where eta = (r, s).
i64 coset_number(const IntVec2& eta, const Slope& slope, i64 d_prime);

PullbackSummary analyze_slope(const NetMapPresentation& p, const Slope& slope);
Q multiplier(const NetMapPresentation& p, const Slope& slope);

// "d=5 d'=2 c=(0,0,2,2) ess=2 per=0 null=0 delta=2/5"
std::string to_string(const PullbackSummary& s);

} // namespace netmap
