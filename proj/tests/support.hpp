#pragma once

#include "netmap/presentation.hpp"

#include <random>
#include <string>

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(NETMAP_DATA_DIR) + "/" + name; }
inline std::string fixture_path(const std::string& name) { return std::string(NETMAP_FIXTURE_DIR) + "/" + name; }

inline const netmap::NetMapPresentation& main_example() {
    static const auto p = netmap::load_presentation(data_path("main.net"));
    return p;
}
inline const netmap::NetMapPresentation& double_example() {
    static const auto p = netmap::load_presentation(data_path("double.net"));
    return p;
}
inline const netmap::NetMapPresentation& lattes_example() {
    static const auto p = netmap::load_presentation(data_path("lattes.net"));
    return p;
}

// All reduced p/q with |p|, |q| <= h and q > 0, plus infinity.
inline std::vector<netmap::Slope> box_slopes(netmap::i64 h) {
    std::vector<netmap::Slope> out;
    for (netmap::i64 q = 1; q <= h; ++q)
        for (netmap::i64 p = -h; p <= h; ++p)
            if (std::gcd(p, q) == 1) out.push_back(netmap::Slope{true, p, q});
    out.push_back(netmap::Slope::inf());
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240917);
    return g;
}

} // namespace testing

namespace testing {

// a/b as an exact rational. Built by division: the two-argument constructor
// of the Boost 1.74 rational adaptor rejects negative denominators.
inline netmap::Rational frac(netmap::i64 a, netmap::i64 b) { return netmap::Rational(a) / b; }

} // namespace testing
