#include "netmap/pullback.hpp"

#include <algorithm>
#include <stdexcept>

namespace netmap {

i64 coset_number(const IntVec2& eta, const Slope& slope, i64 d_prime) {
    const i64 mod = 2 * d_prime;
    const i64 x = mod_pos(mod_pos(slope.p, mod) * mod_pos(eta.x, mod) - mod_pos(slope.q, mod) * mod_pos(eta.y, mod), mod);
    return std::min(x, mod - x);
}

PullbackSummary analyze_slope(const NetMapPresentation& p, const Slope& slope) {
    if (!slope.essential) throw std::invalid_argument("analyze_slope needs an essential slope");
    PullbackSummary s;
    s.slope = slope;
    s.d = order_in_quotient(slope.vec(), p.lambda1);
    s.d_prime = degree(p) / s.d;
    for (int k = 0; k < 4; ++k) s.coset_numbers[k] = coset_number(p.postcritical[k], slope, s.d_prime);
    std::sort(s.coset_numbers.begin(), s.coset_numbers.end());
    const auto& c = s.coset_numbers;
    s.essential = c[2] - c[1];
    s.peripheral = (c[1] - c[0]) + (c[3] - c[2]);
    s.null_homotopic = c[0] - c[3] + s.d_prime;
    s.multiplier = Q(s.essential, s.d);
    return s;
}

Q multiplier(const NetMapPresentation& p, const Slope& slope) { return analyze_slope(p, slope).multiplier; }

std::string to_string(const PullbackSummary& s) {
    const auto& c = s.coset_numbers;
    return "d=" + std::to_string(s.d) + " d'=" + std::to_string(s.d_prime) + " c=(" + std::to_string(c[0]) + "," +
           std::to_string(c[1]) + "," + std::to_string(c[2]) + "," + std::to_string(c[3]) +
           ") ess=" + std::to_string(s.essential) + " per=" + std::to_string(s.peripheral) +
           " null=" + std::to_string(s.null_homotopic) + " delta=" + to_string(s.multiplier);
}

} // namespace netmap
