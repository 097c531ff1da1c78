#pragma once

// Horoball moduli, the half-spaces they determine, and boundary cover checks.

#include "netmap/slope_fn.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace netmap {

// a + b*sqrt(k), k squarefree; k = 0 means b = 0.
struct QuadExt {
    Rational a{0};
    Rational b{0};
    i64 k = 0;

    static QuadExt rational(const Rational& r) { return {r, 0, 0}; }
    // coef * sqrt(radicand) for a nonnegative rational radicand.
    static QuadExt sqrt_of(const Rational& radicand, const Rational& coef = 1);

    bool is_rational() const { return k == 0 || b == 0; }
    int sign() const;
    QuadExt operator-() const { return {-a, -b, k}; }
    // Only defined when both operands share a radicand or one is rational.
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const { return *this + (-o); }
    double approx() const;
};

// Sign of a + b*sqrt(j) + c*sqrt(k).
int sign_two_radicals(const Rational& a, const Rational& b, i64 j, const Rational& c, i64 k);
int compare(const QuadExt& x, const QuadExt& y);
inline bool operator<(const QuadExt& x, const QuadExt& y) { return compare(x, y) < 0; }
inline bool operator==(const QuadExt& x, const QuadExt& y) { return compare(x, y) == 0; }
std::string to_string(const QuadExt& x);

// Gaussian rational point x + i*y.
struct GaussQ {
    Rational x;
    Rational y;
};

// Im(tau) / |p*tau + q|^2
Rational modulus(const GaussQ& tau, const Slope& slope);

enum class HalfSpaceKind { InsideCircle, OutsideCircle, LeftOfVertical, RightOfVertical };
const char* to_string(HalfSpaceKind k);

struct HalfSpace {
    HalfSpaceKind kind = HalfSpaceKind::InsideCircle;
    Rational center{0};  // C, or the abscissa of the vertical line
    QuadExt radius;      // unused for vertical kinds
    Slope slope;
    Slope image;
    Rational delta{0};

    bool bounded() const { return kind == HalfSpaceKind::InsideCircle; }
    // R^2 as an exact rational.
    Rational radius_squared() const;
};

// The half-space for a slope s = p/q, image s' = p'/q' and multiplier delta.
// Requires s != s'.
HalfSpace make_halfspace(const Slope& s, const Slope& image, const Rational& delta);

// None when sigma(slope) is o or slope itself.
std::optional<HalfSpace> halfspace_for(const NetMapPresentation& p, const Slope& slope);

// Open subset of the circle R u {inf}.
struct BoundaryArc {
    enum class Shape {
        Interval,    // (lo, hi)
        Complement,  // x < lo or x > hi, and inf
        Below,       // x < hi
        Above,       // x > lo
    };
    Shape shape = Shape::Interval;
    QuadExt lo;
    QuadExt hi;

    bool contains(const QuadExt& x) const;
    bool contains_infinity() const { return shape == Shape::Complement; }
    std::vector<QuadExt> endpoints() const;
};

BoundaryArc boundary_interval(const HalfSpace& h);
// a is a subset of b.
bool arc_subset(const BoundaryArc& a, const BoundaryArc& b);
std::string to_string(const BoundaryArc& b);

struct LeftoverPoint {
    std::optional<QuadExt> point;  // nullopt is the point at infinity
    bool rational = true;
};

struct Gap {
    std::optional<QuadExt> lo;  // nullopt: unbounded below
    std::optional<QuadExt> hi;  // nullopt: unbounded above
};

struct CoverVerdict {
    bool covered = false;
    std::vector<LeftoverPoint> points;
    std::vector<Gap> gaps;
    // Covered apart from isolated points.
    bool only_points() const { return gaps.empty(); }
};

CoverVerdict cover_certificate(const std::vector<HalfSpace>& spaces);
CoverVerdict cover_arcs(const std::vector<BoundaryArc>& arcs);

} // namespace netmap
