#include "netmap/symmetry.hpp"
#include "netmap/errors.hpp"
#include "netmap/obstruction.hpp"

#include <regex>
#include <set>

namespace netmap {

bool Mobius::same_map(const Mobius& o) const {
    if (conjugating != o.conjugating) return false;
    return (a == o.a && b == o.b && c == o.c && d == o.d) || (a == -o.a && b == -o.b && c == -o.c && d == -o.d);
}

Mobius compose(const Mobius& f, const Mobius& g) {
    // Integer coefficients commute with conjugation, so only the parity of conjugations matters.
    Mat2 m = f.matrix() * g.matrix();
    return {m.a, m.b, m.c, m.d, f.conjugating != g.conjugating};
}

Mobius inverse(const Mobius& f) {
    Mat2 m = f.matrix().adj();
    const i64 s = f.det();
    return {s * m.a, s * m.b, s * m.c, s * m.d, f.conjugating};
}

Mobius power(const Mobius& f, i64 n) {
    Mobius r;
    for (i64 i = 0; i < n; ++i) r = compose(r, f);
    return r;
}

Slope act_on_slope(const Mobius& f, const Slope& s) {
    if (!s.essential) return s;
    const i128 p = static_cast<i128>(f.c) * s.q - static_cast<i128>(f.d) * s.p;
    const i128 q = static_cast<i128>(f.b) * s.p - static_cast<i128>(f.a) * s.q;
    const i128 lim = std::numeric_limits<i64>::max();
    if (p > lim || p < -lim || q > lim || q < -lim) throw std::overflow_error("slope action overflows");
    return slope_normalize(static_cast<i64>(p), static_cast<i64>(q));
}

namespace {

// k*var + c with the usual elisions.
std::string linear_text(i64 k, const std::string& var, i64 c) {
    std::string s;
    if (k != 0) {
        if (k == -1) s = "-";
        else if (k != 1) s = std::to_string(k);
        s += var;
    }
    if (c != 0 || k == 0) {
        if (!s.empty() && c > 0) s += "+";
        s += std::to_string(c);
    }
    return s;
}

bool is_simple(const std::string& t) { return t.find_first_of("+-", 1) == std::string::npos; }


Slope boundary_point(const Slope& s) { return slope_normalize(-s.q, s.p); }

std::vector<QVec2> apply(const AffineMap& f, const std::vector<QVec2>& pts) {
    std::vector<QVec2> out;
    for (const auto& q : pts)
        out.push_back({q.x * f.linear.a + q.y * f.linear.b + f.translation.x,
                       q.x * f.linear.c + q.y * f.linear.d + f.translation.y});
    return out;
}

// pts = base + u for one u in 2 Lambda1.
bool translate_of(const std::vector<QVec2>& pts, const std::vector<QVec2>& base, const Basis2& twoL1) {
    if (pts.size() != base.size()) return false;
    const QVec2 u = pts[0] - base[0];
    if (u.x.denominator() != 1 || u.y.denominator() != 1) return false;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] - base[i] != u) return false;
    return in_lattice({u.x.numerator(), u.y.numerator()}, twoL1);
}

std::set<i64> class_set(const NetMapPresentation& p, const FiniteAbelianPres& A) {
    std::set<i64> out;
    for (const auto& h : p.postcritical) {
        out.insert(A.index(reduce_mod(h, A)));
        out.insert(A.index(reduce_mod(-h, A)));
    }
    return out;
}

} // namespace

std::string formula(const Mobius& f) { return formula(f, "z"); }

std::string formula(const Mobius& f0, const std::string& z) {
    Mobius f = f0;
    if (f.c < 0 || (f.c == 0 && f.d < 0)) f = {-f.a, -f.b, -f.c, -f.d, f.conjugating};
    const std::string var = f.conjugating ? "conj(" + z + ")" : z;
    std::string num = linear_text(f.a, var, f.b), den = linear_text(f.c, var, f.d);
    if (den == "1") return num;
    if (!is_simple(num)) num = "(" + num + ")";
    return num + "/(" + den + ")";
}

std::string to_string(const Mobius& f) { return (f.conjugating ? "conj " : "") + to_string(f.matrix()); }

Mobius twist_matrix(const Slope& s) {
    if (!s.essential) throw std::invalid_argument("twist about o");
    const i64 p = s.p, q = s.q;
    return {1 + 2 * p * q, 2 * q * q, -2 * p * p, 1 - 2 * p * q, false};
}

FunctionalEquation twist_equation(const NetMapPresentation& p, const Slope& s) {
    const PullbackSummary sum = analyze_slope(p, s);
    FunctionalEquation e;
    e.inner = twist_matrix(s);
    e.inner_power = sum.d;
    e.outer_power = sum.essential;
    e.outer = sum.essential > 0 ? twist_matrix(sigma(p, s)) : Mobius::identity();
    return e;
}

std::string to_string(const FunctionalEquation& e) {
    std::string s = "Sigma_f . " + to_string(e.inner) + "^" + std::to_string(e.inner_power) + " = ";
    if (e.outer_power > 0) s += to_string(e.outer) + "^" + std::to_string(e.outer_power) + " . ";
    return s + "Sigma_f";
}

std::string substituted(const FunctionalEquation& e) {
    const Mobius in = power(inverse(e.inner), e.inner_power), out = power(inverse(e.outer), e.outer_power);
    return "Sigma_f(" + formula(in) + ") = " + formula(out, "Sigma_f(z)");
}

ReflectionPair reflection_equation(const NetMapPresentation& p, const Slope& s1, const Slope& s2) {
    if (!s1.essential || !s2.essential) throw HypothesisFailed(HypothesisReason::SigmaCollision);
    const IntVec2 lam = s1.vec(), mu = s2.vec();
    const i64 D = det(lam, mu);
    if (std::abs(D) != 1) throw HypothesisFailed(HypothesisReason::NotBasisLambda2);
    const i64 d = order_in_quotient(lam, p.lambda1), d2 = order_in_quotient(mu, p.lambda1);
    if (std::abs(det(d * lam, d2 * mu)) != degree(p)) throw HypothesisFailed(HypothesisReason::NotBasisLambda1);
    const FiniteAbelianPres A = quotient_presentation(p.lambda1, 2);
    const std::set<i64> S = class_set(p, A);
    for (const auto& h0 : p.postcritical) {
        for (const IntVec2& h : {h0, -h0}) {
            // h = x lam + y mu
            const IntVec2 xy = coords_scaled(h, Basis2{lam, mu});
            const i64 x = xy.x * D, y = xy.y * D;
            const IntVec2 img = (2 * d - x) * lam + y * mu;
            if (!S.count(A.index(reduce_mod(img, A)))) throw HypothesisFailed(HypothesisReason::ClassSetNotInvariant);
        }
    }
    const Slope t1 = sigma(p, s1), t2 = sigma(p, s2);
    if (!t1.essential || !t2.essential || t1 == t2) throw HypothesisFailed(HypothesisReason::SigmaCollision);
    return {{boundary_point(s1), boundary_point(s2)}, {boundary_point(t1), boundary_point(t2)}};
}

AffineMap parse_affine(const std::string& text) {
    static const std::regex re(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:;\s*(-?\d+)\s*,\s*(-?\d+)\s*)?)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("expected \"a,b;c,d;tx,ty\", got \"" + text + "\"");
    auto n = [&](int i) { return m[i].matched ? std::stoll(m[i]) : 0LL; };
    return {Mat2{n(1), n(2), n(3), n(4)}, IntVec2{n(5), n(6)}};
}

bool aff_membership(const NetMapPresentation& p, const AffineMap& f) {
    if (std::abs(f.linear.det()) != 1) return false;
    const Mat2 C = Mat2::columns(p.lambda1.u, p.lambda1.v);
    const Mat2 M = C.adj() * f.linear * C;
    const i64 D = C.det();
    if (M.a % D || M.b % D || M.c % D || M.d % D) return false;
    if (!in_lattice(f.translation, p.lambda1)) return false;
    const FiniteAbelianPres A = quotient_presentation(p.lambda1, 2);
    const std::set<i64> S = class_set(p, A);
    for (const auto& h0 : p.postcritical)
        for (const IntVec2& h : {h0, -h0})
            if (!S.count(A.index(reduce_mod(f.linear * h + f.translation, A)))) return false;
    return true;
}

Mobius sigma_delta2(const Mat2& L) {
    if (std::abs(L.det()) != 1) throw std::invalid_argument("linear part must have determinant +-1");
    return {L.d, L.b, L.c, L.a, L.det() == -1};
}

Mat2 lambda1_matrix(const NetMapPresentation& p, const Mat2& linear) {
    const Mat2 C = Mat2::columns(p.correspondence.u, p.correspondence.v);
    const Mat2 M = C.adj() * linear * C;
    const i64 D = C.det();
    if (M.a % D || M.b % D || M.c % D || M.d % D) throw std::invalid_argument("linear part does not stabilize Lambda1");
    return {M.a / D, M.b / D, M.c / D, M.d / D};
}

bool stabilizes_mirrors(const NetMapPresentation& p, const AffineMap& f) {
    const Basis2 twoL1{2 * p.lambda1.u, 2 * p.lambda1.v};
    std::vector<std::vector<QVec2>> full;
    for (const auto& m : p.mirrors) full.push_back(m.full());
    for (const auto& F : full) {
        std::vector<QVec2> img = apply(f, F), rev(img.rbegin(), img.rend());
        bool found = false;
        for (const auto& G : full) found = found || translate_of(img, G, twoL1) || translate_of(rev, G, twoL1);
        if (!found) return false;
    }
    return true;
}

Mobius sigma_delta1(const NetMapPresentation& p, const AffineMap& f) {
    if (!aff_membership(p, f)) throw std::invalid_argument("affine map is not in Aff(f)");
    if (!stabilizes_mirrors(p, f)) throw MirrorsNotStabilized();
    return sigma_delta2(lambda1_matrix(p, f.linear));
}

ConsistencyReport consistency_suite(const NetMapPresentation& p, const std::vector<AffineMap>& elements, i64 height,
                                    i64 twist_height) {
    ConsistencyReport rep;
    const auto slopes = enumerate_slopes(height);
    std::vector<Slope> image;
    for (const Slope& s : slopes) image.push_back(sigma(p, s));
    for (const auto& f : elements) {
        const Mobius m2 = sigma_delta2(f.linear), m1 = sigma_delta1(p, f);
        for (std::size_t i = 0; i < slopes.size(); ++i) {
            ++rep.checked;
            const Slope lhs = sigma(p, act_on_slope(m2, slopes[i])), rhs = act_on_slope(m1, image[i]);
            if (lhs != rhs)
                rep.violations.push_back("affine " + to_string(f.linear) + " at " + to_string(slopes[i]) + ": " +
                                         to_string(lhs) + " != " + to_string(rhs));
        }
    }
    const auto small = enumerate_slopes(twist_height);
    for (const Slope& s : small) {
        const FunctionalEquation e = twist_equation(p, s);
        const Mobius phi = power(e.inner, e.inner_power), psi = power(e.outer, e.outer_power);
        for (const Slope& t : small) {
            ++rep.checked;
            try {
                const Slope lhs = sigma(p, act_on_slope(phi, t)), rhs = act_on_slope(psi, sigma(p, t));
                if (lhs != rhs)
                    rep.violations.push_back("twist about " + to_string(s) + " at " + to_string(t) + ": " +
                                             to_string(lhs) + " != " + to_string(rhs));
            } catch (const Error& err) {
                rep.violations.push_back("twist about " + to_string(s) + " at " + to_string(t) + ": " + err.what());
            }
        }
    }
    return rep;
}

std::optional<std::pair<Q, Q>> invariant_line(const NetMapPresentation& p, const std::vector<AffineMap>& elements) {
    // Each element gives x -> al*x + be on slopes and y -> ga*y + ep on images;
    // y = m x + b is carried to itself iff m(al - ga) = 0 and m be + b(1 - ga) = ep.
    std::vector<std::array<Q, 3>> rows;
    for (const auto& f : elements) {
        const Mobius m2 = sigma_delta2(f.linear), m1 = sigma_delta1(p, f);
        if (m2.b != 0 || m1.b != 0) return std::nullopt;
        // Slope action s -> (c - d s)/(-a) for a Mobius map with b = 0.
        const Q al(m2.d, m2.a), be(-m2.c, m2.a), ga(m1.d, m1.a), ep(-m1.c, m1.a);
        rows.push_back({al - ga, Q(0), Q(0)});
        rows.push_back({be, 1 - ga, ep});
    }
    // Solve the 2x2 system from the first independent pair of rows, then check the rest.
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Q det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            if (det == Q(0)) continue;
            const Q m = (rows[i][2] * rows[j][1] - rows[i][1] * rows[j][2]) / det;
            const Q b = (rows[i][0] * rows[j][2] - rows[i][2] * rows[j][0]) / det;
            for (const auto& r : rows)
                if (r[0] * m + r[1] * b != r[2]) return std::nullopt;
            return std::make_pair(m, b);
        }
    return std::nullopt;
}

} // namespace netmap
