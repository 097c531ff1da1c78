#pragma once

// Integer lattice arithmetic in Z^2 and two-generator finite abelian quotients.

#include "netmap/arith.hpp"

#include <array>
#include <functional>
#include <ostream>
#include <string>

namespace netmap {

struct IntVec2 {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const IntVec2&, const IntVec2&) = default;
    friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
    IntVec2 operator+(const IntVec2& o) const { return {x + o.x, y + o.y}; }
    IntVec2 operator-(const IntVec2& o) const { return {x - o.x, y - o.y}; }
    IntVec2 operator-() const { return {-x, -y}; }
    friend IntVec2 operator*(i64 k, const IntVec2& v) { return {k * v.x, k * v.y}; }
};

std::string to_string(const IntVec2& v);
std::ostream& operator<<(std::ostream& os, const IntVec2& v);

inline i64 det(const IntVec2& a, const IntVec2& b) { return a.x * b.y - a.y * b.x; }

// Element of Q-hat = Q u {inf}, or the symbol o.
struct Slope {
    bool essential = true;
    i64 p = 0;
    i64 q = 1;

    static Slope o() { return Slope{false, 0, 0}; }
    static Slope inf() { return Slope{true, 1, 0}; }
    bool is_inf() const { return essential && q == 0; }
    // The primitive vector q*lambda2 + p*mu2.
    IntVec2 vec() const { return {q, p}; }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;
};

// Canonical form: gcd 1, q >= 0, infinity is 1/0.
Slope slope_normalize(i64 p, i64 q);

// "p/q", "p", "inf" (also "o").
Slope parse_slope(const std::string& text);
std::string to_string(const Slope& s);
std::ostream& operator<<(std::ostream& os, const Slope& s);
// max(|p|, |q|)
i64 height(const Slope& s);
double slope_value(const Slope& s);

struct SlopeHash {
    std::size_t operator()(const Slope& s) const noexcept {
        return std::hash<i64>()(s.p * 1000003 + s.q) ^ (s.essential ? 0 : 0x9e3779b9);
    }
};

struct Basis2 {
    IntVec2 u;
    IntVec2 v;

    i64 det() const { return netmap::det(u, v); }
    friend bool operator==(const Basis2&, const Basis2&) = default;
};

// 2x2 integer matrix [[a,b],[c,d]] acting on column vectors.
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    i64 det() const { return a * d - b * c; }
    IntVec2 operator*(const IntVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
    // Adjugate; equals det * inverse.
    Mat2 adj() const { return {d, -b, -c, a}; }
    static Mat2 columns(const IntVec2& u, const IntVec2& v) { return {u.x, v.x, u.y, v.y}; }
};

std::string to_string(const Mat2& m);

// Coordinates of v in the basis B, as numerators over B.det().
IntVec2 coords_scaled(const IntVec2& v, const Basis2& B);
bool in_lattice(const IntVec2& v, const Basis2& B);

// Smallest d >= 1 with d*v in the lattice spanned by B.
i64 order_in_quotient(const IntVec2& v, const Basis2& B);

struct Smith {
    Mat2 U;       // unimodular
    Mat2 V;       // unimodular
    i64 m = 1;    // U * M * V = diag(m, n), m | n, both positive
    i64 n = 1;
};

Smith smith_normal_form(const Mat2& M);

// Z^2 / (scale * L) as Z/m + Z/n with stored coordinate transforms.
struct FiniteAbelianPres {
    i64 m = 1;
    i64 n = 1;
    Mat2 to_coords;    // v -> to_coords * v, then reduce mod (m, n)
    Mat2 from_coords;  // inverse of to_coords

    i64 order() const { return m * n; }
    // Dense index in [0, m*n).
    i64 index(const IntVec2& g) const { return g.x * n + g.y; }
    IntVec2 element(i64 idx) const { return {idx / n, idx % n}; }
};

FiniteAbelianPres quotient_presentation(const Basis2& sublattice, i64 scale);
IntVec2 reduce_mod(const IntVec2& v, const FiniteAbelianPres& pres);
// A representative in Z^2 of a group element.
IntVec2 lift(const IntVec2& g, const FiniteAbelianPres& pres);

} // namespace netmap
