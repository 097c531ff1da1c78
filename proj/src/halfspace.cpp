#include "netmap/halfspace.hpp"

#include <algorithm>
#include <cmath>

namespace netmap {

namespace {

int sgn(const Rational& r) { return r.sign(); }

// Sign of a + b*sqrt(k), k >= 0.
int sign_one_radical(const Rational& a, const Rational& b, i64 k) {
    if (k == 0 || b == 0) return sgn(a);
    const int sa = sgn(a), sb = sgn(b);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    return sa * sgn(a * a - b * b * k);
}

// n = s^2 * k with k squarefree.
std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
    BigInt s = 1, k = 1;
    for (BigInt f = 2; f * f <= n; ++f) {
        while (n % (f * f) == 0) {
            n /= f * f;
            s *= f;
        }
        if (n % f == 0) {
            n /= f;
            k *= f;
        }
    }
    return {s, k * n};
}

Rational make_rational(const Q& q) { return Rational(q.numerator()) / Rational(q.denominator()); }

} // namespace

QuadExt QuadExt::sqrt_of(const Rational& radicand, const Rational& coef) {
    if (radicand < 0) throw std::domain_error("square root of a negative number");
    if (radicand == 0 || coef == 0) return rational(0);
    const BigInt n = numerator(radicand), d = denominator(radicand);
    auto [s, k] = squarefree_split(n * d);
    Rational b = coef * Rational(s) / Rational(d);
    if (k == 1) return rational(b);
    return QuadExt{0, b, to_i64(k)};
}

int QuadExt::sign() const { return sign_one_radical(a, b, k); }

QuadExt QuadExt::operator+(const QuadExt& o) const {
    if (is_rational()) return {a + o.a, o.b, o.k};
    if (o.is_rational()) return {a + o.a, b, k};
    if (k != o.k) throw std::invalid_argument("sum of different quadratic fields");
    QuadExt r{a + o.a, b + o.b, k};
    if (r.b == 0) r.k = 0;
    return r;
}

double QuadExt::approx() const {
    return static_cast<double>(a) + (k == 0 ? 0.0 : static_cast<double>(b) * std::sqrt(static_cast<double>(k)));
}

int sign_two_radicals(const Rational& a, const Rational& b, i64 j, const Rational& c, i64 k) {
    if (k == 0 || c == 0) return sign_one_radical(a, b, j);
    if (j == 0 || b == 0) return sign_one_radical(a, c, k);
    if (j == k) return sign_one_radical(a, b + c, j);
    const int sa = sign_one_radical(a, b, j), sc = sgn(c);
    if (sa == 0) return sc;
    if (sa == sc) return sa;
    // |alpha| vs |c sqrt k|: compare squares.
    return sa * sign_one_radical(a * a + b * b * j - c * c * k, 2 * a * b, j);
}

int compare(const QuadExt& x, const QuadExt& y) { return sign_two_radicals(x.a - y.a, x.b, x.k, -y.b, y.k); }

std::string to_string(const QuadExt& x) {
    if (x.is_rational()) return to_string(x.a);
    std::string rad = "sqrt(" + std::to_string(x.k) + ")";
    Rational mag = abs(x.b);
    std::string term = (mag == 1) ? rad : to_string(mag) + "*" + rad;
    if (x.a == 0) return (x.b < 0 ? "-" : "") + term;
    return to_string(x.a) + (x.b < 0 ? " - " : " + ") + term;
}

Rational modulus(const GaussQ& tau, const Slope& slope) {
    const Rational re = Rational(slope.p) * tau.x + slope.q, im = Rational(slope.p) * tau.y;
    return tau.y / (re * re + im * im);
}

const char* to_string(HalfSpaceKind k) {
    switch (k) {
    case HalfSpaceKind::InsideCircle: return "inside";
    case HalfSpaceKind::OutsideCircle: return "outside";
    case HalfSpaceKind::LeftOfVertical: return "left";
    case HalfSpaceKind::RightOfVertical: return "right";
    }
    return "?";
}

Rational HalfSpace::radius_squared() const {
    if (radius.k == 0) return radius.a * radius.a;
    return radius.b * radius.b * radius.k;
}

HalfSpace make_halfspace(const Slope& s, const Slope& image, const Rational& delta) {
    if (s == image) throw std::invalid_argument("half-space needs two different slopes");
    const Rational p = s.p, q = s.q, p2 = image.p, q2 = image.q;
    HalfSpace h;
    h.slope = s;
    h.image = image;
    h.delta = delta;
    const Rational den = p * p - delta * p2 * p2;
    if (den == 0) {
        // Equal radii: the bisector is a vertical line.
        h.center = -(q / p + q2 / p2) / 2;
        h.kind = (-q / p < h.center) ? HalfSpaceKind::LeftOfVertical : HalfSpaceKind::RightOfVertical;
        return h;
    }
    h.center = (-p * q + delta * p2 * q2) / den;
    h.radius = QuadExt::sqrt_of(delta, abs(p * q2 - p2 * q) / abs(den));
    h.kind = den > 0 ? HalfSpaceKind::InsideCircle : HalfSpaceKind::OutsideCircle;
    return h;
}

std::optional<HalfSpace> halfspace_for(const NetMapPresentation& p, const Slope& slope) {
    const Slope image = sigma(p, slope);
    if (!image.essential || image == slope) return std::nullopt;
    return make_halfspace(slope, image, make_rational(multiplier(p, slope)));
}

bool BoundaryArc::contains(const QuadExt& x) const {
    switch (shape) {
    case Shape::Interval: return lo < x && x < hi;
    case Shape::Complement: return x < lo || hi < x;
    case Shape::Below: return x < hi;
    case Shape::Above: return lo < x;
    }
    return false;
}

std::vector<QuadExt> BoundaryArc::endpoints() const {
    switch (shape) {
    case Shape::Interval:
    case Shape::Complement: return {lo, hi};
    case Shape::Below: return {hi};
    case Shape::Above: return {lo};
    }
    return {};
}

BoundaryArc boundary_interval(const HalfSpace& h) {
    BoundaryArc b;
    const QuadExt c = QuadExt::rational(h.center);
    switch (h.kind) {
    case HalfSpaceKind::InsideCircle:
        b.shape = BoundaryArc::Shape::Interval;
        b.lo = c - h.radius;
        b.hi = c + h.radius;
        break;
    case HalfSpaceKind::OutsideCircle:
        b.shape = BoundaryArc::Shape::Complement;
        b.lo = c - h.radius;
        b.hi = c + h.radius;
        break;
    case HalfSpaceKind::LeftOfVertical:
        b.shape = BoundaryArc::Shape::Below;
        b.hi = c;
        break;
    case HalfSpaceKind::RightOfVertical:
        b.shape = BoundaryArc::Shape::Above;
        b.lo = c;
        break;
    }
    return b;
}

std::string to_string(const BoundaryArc& b) {
    switch (b.shape) {
    case BoundaryArc::Shape::Interval: return "(" + to_string(b.lo) + ", " + to_string(b.hi) + ")";
    case BoundaryArc::Shape::Complement:
        return "(-inf, " + to_string(b.lo) + ") u (" + to_string(b.hi) + ", +inf) u {inf}";
    case BoundaryArc::Shape::Below: return "(-inf, " + to_string(b.hi) + ")";
    case BoundaryArc::Shape::Above: return "(" + to_string(b.lo) + ", +inf)";
    }
    return "?";
}

namespace {

// Whether the open gap (x, y) lies in the arc; a missing bound is infinite.
bool gap_inside(const BoundaryArc& a, const std::optional<QuadExt>& x, const std::optional<QuadExt>& y) {
    using S = BoundaryArc::Shape;
    switch (a.shape) {
    case S::Interval: return x && y && !(*x < a.lo) && !(a.hi < *y);
    case S::Complement: return (y && !(a.lo < *y)) || (x && !(*x < a.hi));
    case S::Below: return y && !(a.hi < *y);
    case S::Above: return x && !(*x < a.lo);
    }
    return false;
}

} // namespace

bool arc_subset(const BoundaryArc& a, const BoundaryArc& b) {
    using S = BoundaryArc::Shape;
    switch (a.shape) {
    case S::Interval: return gap_inside(b, a.lo, a.hi);
    case S::Complement:
        return b.contains_infinity() && gap_inside(b, std::nullopt, a.lo) && gap_inside(b, a.hi, std::nullopt);
    case S::Below: return gap_inside(b, std::nullopt, a.hi);
    case S::Above: return gap_inside(b, a.lo, std::nullopt);
    }
    return false;
}

CoverVerdict cover_arcs(const std::vector<BoundaryArc>& arcs) {
    std::vector<QuadExt> ends;
    for (const auto& a : arcs)
        for (const auto& e : a.endpoints()) ends.push_back(e);
    std::sort(ends.begin(), ends.end(), [](const QuadExt& x, const QuadExt& y) { return x < y; });
    ends.erase(std::unique(ends.begin(), ends.end(), [](const QuadExt& x, const QuadExt& y) { return x == y; }),
               ends.end());

    CoverVerdict v;
    auto gap_covered = [&](const std::optional<QuadExt>& x, const std::optional<QuadExt>& y) {
        return std::any_of(arcs.begin(), arcs.end(), [&](const BoundaryArc& a) { return gap_inside(a, x, y); });
    };
    std::optional<QuadExt> prev;
    for (const auto& e : ends) {
        if (!gap_covered(prev, e)) v.gaps.push_back({prev, e});
        if (std::none_of(arcs.begin(), arcs.end(), [&](const BoundaryArc& a) { return a.contains(e); }))
            v.points.push_back({e, e.is_rational()});
        prev = e;
    }
    if (!gap_covered(prev, std::nullopt)) v.gaps.push_back({prev, std::nullopt});
    if (std::none_of(arcs.begin(), arcs.end(), [](const BoundaryArc& a) { return a.contains_infinity(); }))
        v.points.push_back({std::nullopt, true});
    v.covered = v.points.empty() && v.gaps.empty();
    return v;
}

CoverVerdict cover_certificate(const std::vector<HalfSpace>& spaces) {
    std::vector<BoundaryArc> arcs;
    for (const auto& h : spaces) arcs.push_back(boundary_interval(h));
    return cover_arcs(arcs);
}

} // namespace netmap
