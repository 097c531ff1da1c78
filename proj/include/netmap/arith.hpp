#pragma once

// Integer and rational helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netmap {

using i64 = std::int64_t;
using i128 = __int128;

// Arbitrary precision rational, used where products of formulas may grow.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Small exact rational for polyline vertices.
using Q = boost::rational<i64>;

inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

inline i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

// Representative of a in [0, m).
inline i64 mod_pos(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline int sign_of(i128 v) { return (v > 0) - (v < 0); }

inline i64 to_i64(const BigInt& v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<i64>(v);
}

std::string to_string(const Rational& r);
std::string to_string(const Q& r);

// Parses "r" or "r/s".
Q parse_q(const std::string& text);

} // namespace netmap
