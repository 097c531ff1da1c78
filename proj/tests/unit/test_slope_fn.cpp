#include "netmap/errors.hpp"
#include "netmap/slope_fn.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace netmap;

namespace {

// Base point and multiple of (q, p) by residue class (q mod 4, 2p + q mod 5).
std::pair<IntVec2, i64> table_vw(const Slope& s) {
    const i64 q4 = mod_pos(s.q, 4), r5 = mod_pos(2 * s.p + s.q, 5);
    const bool one = r5 == 1 || r5 == 4;
    if (q4 == 0) return {{0, 0}, r5 == 0 ? 1 : 5};
    if (q4 == 2) {
        if (r5 == 0) return {{2, 0}, 2};
        return {{0, 0}, one ? 3 : 1};
    }
    if (r5 == 0) return {{2, 0}, 4};
    return {{0, 0}, one ? 2 : 6};
}

Slope add_int(const Slope& s, i64 c) {
    if (!s.essential || s.is_inf()) return s;
    return slope_normalize(s.p + c * s.q, s.q);
}

Slope negate(const Slope& s) {
    if (!s.essential || s.is_inf()) return s;
    return slope_normalize(-s.p, s.q);
}

Slope in_basis(const Basis2& B, const QVec2& v) {
    // v = a B.u + b B.v
    const Q D(B.det());
    const Q a = (v.x * Q(B.v.y) - v.y * Q(B.v.x)) / D, b = (v.y * Q(B.u.x) - v.x * Q(B.u.y)) / D;
    const i64 l = std::lcm(a.denominator(), b.denominator());
    return slope_normalize((b * Q(l)).numerator(), (a * Q(l)).numerator());
}

// The longer zigzag: start on an essential line between two postcritical
// levels, walk 2d lambda, and reflect the endpoint through every mirror met.
Slope sigma_by_long_segment(const NetMapPresentation& p, const Slope& s, i64 steps_of_d) {
    const auto sum = analyze_slope(p, s);
    if (sum.essential == 0) return Slope::o();
    const IntVec2 lambda = s.vec();
    IntVec2 mu;
    for (i64 a = -60; a <= 60 && mu == IntVec2{}; ++a)
        for (i64 b = -60; b <= 60; ++b)
            if (s.p * a - s.q * b == 1) {
                mu = {a, b};
                break;
            }
    for (Q t : {Q(1, 2), Q(1, 3), Q(2, 3), Q(1, 5)}) {
        const Q level = Q(sum.coset_numbers[1]) + t;
        const QVec2 v{level * Q(mu.x), level * Q(mu.y)};
        const QVec2 w = v + QVec2::of(steps_of_d * sum.d * lambda);
        // v must not lie on a mirror: probe a short segment through it
        const QVec2 eps{Q(lambda.x, 997), Q(lambda.y, 997)};
        std::vector<IntVec2> mids;
        try {
            if (!crossing_midpoints(p, v - eps, v + eps).empty()) continue;
            mids = crossing_midpoints(p, v, w);
        } catch (const Error&) {
            continue;
        }
        QVec2 wp = (mids.size() % 2 == 0) ? w : QVec2{-w.x, -w.y};
        for (std::size_t i = 0; i < mids.size(); ++i) {
            const QVec2 m = QVec2::of(2 * mids[i]);
            wp = (i % 2 == 0) ? wp + m : wp - m;
        }
        return in_basis(p.correspondence, wp - v);
    }
    FAIL("no transverse start for " << to_string(s));
    return Slope::o();
}

} // namespace

TEST_CASE("segment choice for the main example") {
    const auto& p = testing::main_example();
    const Basis2 twice{2 * p.lambda1.u, 2 * p.lambda1.v};
    for (const auto& s : testing::box_slopes(25)) {
        if (s.is_inf()) continue;
        const auto [v, w] = find_segment(p, s);
        const auto [v0, k] = table_vw(s);
        CHECK(w - v == k * s.vec());
        CHECK(in_lattice(v - v0, twice));
    }
    CHECK(find_segment(p, parse_slope("3/2")) == std::pair<IntVec2, IntVec2>{{0, 0}, {2, 3}});
    CHECK(find_segment(p, parse_slope("1/4")) == std::pair<IntVec2, IntVec2>{{0, 0}, {20, 5}});
    CHECK(find_segment(p, parse_slope("1/2")) == std::pair<IntVec2, IntVec2>{{0, 0}, {6, 3}});
    CHECK_THROWS_AS(find_segment(testing::double_example(), parse_slope("1/1")), NonEssential);
}

TEST_CASE("mirror crossings") {
    const auto& p = testing::main_example();
    const auto mids = mirror_crossings(p, {0, 0}, {2, 3});
    CHECK(mids == std::vector<IntVec2>{{0, 0}, {2, 4}});
    const QVec2 a{Q(1, 2), Q(0)}, b{Q(41, 2), Q(5)};
    CHECK(crossing_midpoints(p, a, b).size() == 2);
    // translation by 2 Lambda1 moves every midpoint by the same vector
    const IntVec2 t = 2 * p.lambda1.u - 2 * p.lambda1.v;
    for (const auto& s : testing::box_slopes(8)) {
        if (s.is_inf()) continue;
        const auto [v, w] = find_segment(p, s);
        const auto m0 = mirror_crossings(p, v, w), m1 = mirror_crossings(p, v + t, w + t);
        REQUIRE(m0.size() == m1.size());
        for (std::size_t i = 0; i < m0.size(); ++i) CHECK(m1[i] == m0[i] + t);
    }
}

TEST_CASE("zigzag trace invariants") {
    for (const auto* p : {&testing::main_example(), &testing::double_example()}) {
        for (const auto& s : testing::box_slopes(15)) {
            if (analyze_slope(*p, s).essential == 0) {
                CHECK(sigma(*p, s) == Slope::o());
                continue;
            }
            const auto tr = sigma_trace(*p, s);
            const IntVec2 step = tr.w - tr.v;
            CHECK(det(step, s.vec()) == 0);
            CHECK(step.x * s.q + step.y * s.p > 0);
            IntVec2 delta{};
            for (std::size_t i = 0; i + 1 < tr.midpoints.size(); ++i)
                delta = (i % 2 == 0) ? delta + (tr.midpoints[i + 1] - tr.midpoints[i])
                                     : delta - (tr.midpoints[i + 1] - tr.midpoints[i]);
            CHECK(delta == tr.delta);
            CHECK(delta != IntVec2{});
            CHECK(in_lattice(delta, p->lambda1));
            CHECK(tr.result == sigma(*p, s));
        }
    }
}

TEST_CASE("worked values") {
    const auto& p = testing::main_example();
    CHECK(sigma(p, parse_slope("1/4")) == parse_slope("1/2"));
    CHECK(sigma(p, parse_slope("3/2")) == parse_slope("1"));
    CHECK(sigma(p, Slope::inf()) == Slope::inf());
    CHECK(sigma(p, parse_slope("1/3")) == parse_slope("0"));
    CHECK(sigma_main_closed_form(parse_slope("-1/2")) == parse_slope("0"));
}

TEST_CASE("closed form agrees with the mirror computation") {
    const auto& p = testing::main_example();
    for (const auto& s : testing::box_slopes(50)) CHECK(sigma(p, s) == sigma_main_closed_form(s));
}

TEST_CASE("long segment variant agrees") {
    const auto& p = testing::main_example();
    for (const auto& s : testing::box_slopes(15)) {
        if (s.is_inf()) continue;
        CHECK(sigma_by_long_segment(p, s, 2) == sigma(p, s));
    }
    // The shortened walk of length d lambda, on the worked slope only: the
    // nondegenerate mirrors here are invariant under 2 Lambda1 but not Lambda1.
    CHECK(sigma_by_long_segment(p, parse_slope("1/4"), 1) == parse_slope("1/2"));
    for (const auto& s : testing::box_slopes(10)) {
        if (s.is_inf()) continue;
        CHECK(sigma_by_long_segment(testing::double_example(), s, 2) == sigma(testing::double_example(), s));
    }
}

TEST_CASE("sign of the correspondence basis does not matter") {
    auto p = testing::main_example();
    p.correspondence = {-p.correspondence.u, -p.correspondence.v};
    for (const auto& s : testing::box_slopes(12)) CHECK(sigma(p, s) == sigma(testing::main_example(), s));
}

TEST_CASE("functional identities of the main example") {
    const auto& p = testing::main_example();
    for (const auto& s : testing::box_slopes(50)) {
        CHECK(sigma(p, add_int(s, 5)) == add_int(sigma(p, s), 2));
        if (!s.is_inf()) CHECK(sigma(p, negate(add_int(s, 1))) == negate(sigma(p, s)));
    }
}

TEST_CASE("orbits") {
    const auto& p = testing::main_example();
    const auto o = orbit(p, Slope::inf(), 10);
    REQUIRE(o.cycle);
    CHECK(o.cycle->first == 0);
    CHECK(o.cycle->second == 1);
    const auto q = orbit(p, parse_slope("1/4"), 20);
    REQUIRE(q.trajectory.size() >= 4);
    CHECK(q.trajectory[1] == parse_slope("1/2"));
    CHECK(q.trajectory[2] == parse_slope("1/3"));
    CHECK(q.trajectory[3] == parse_slope("0"));
    const auto z = orbit(testing::double_example(), parse_slope("1/1"), 5);
    CHECK(z.trajectory == std::vector<Slope>{parse_slope("1"), Slope::o()});
    CHECK_FALSE(z.cycle);
}
