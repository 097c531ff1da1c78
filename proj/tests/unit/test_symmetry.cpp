#include "netmap/errors.hpp"
#include "netmap/symmetry.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace netmap;

namespace {

Mobius random_sl2() {
    std::uniform_int_distribution<int> pick(0, 3);
    const Mobius gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {0, -1, 1, 0}, {1, 0, 2, 1}};
    Mobius f = Mobius::identity();
    for (int i = 0; i < 6; ++i) f = compose(f, gens[pick(testing::rng())]);
    return f;
}

// Completes (p, q) to C = [[-q,-s],[p,r]] with p s - q r = 1.
Mat2 completion(i64 p, i64 q) {
    // extended Euclid on (p, -q)
    i64 r0 = p, r1 = -q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const i64 k = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
    }
    if (r0 < 0) s0 = -s0, t0 = -t0;
    // p*s0 - q*t0 = 1
    return {-q, -s0, p, t0};
}

} // namespace

TEST_CASE("twist matrices") {
    std::uniform_int_distribution<i64> coord(-60, 60);
    int done = 0;
    while (done < 1000) {
        const i64 p = coord(testing::rng()), q = coord(testing::rng());
        if (std::gcd(p, q) != 1) continue;
        ++done;
        const Mobius t = twist_matrix(slope_normalize(p, q));
        CHECK(t.det() == 1);
        CHECK(t.a + t.d == 2);
        const Mat2 C = completion(p, q);
        const Mat2 T = C * Mat2{1, 2, 0, 1} * C.adj();  // det C = 1
        CHECK(C.det() == 1);
        CHECK(Mobius{T.a, T.b, T.c, T.d}.same_map(t));
        CHECK(Mobius{1 + 2 * p * q, 2 * q * q, -2 * p * p, 1 - 2 * p * q}.same_map(t));
        // parabolic with fixed point -q/p on the boundary
        CHECK(act_on_slope(t, slope_normalize(p, q)) == slope_normalize(p, q));
    }
    CHECK(twist_matrix(Slope::inf()).same_map(Mobius{1, 0, -2, 1}));
}

TEST_CASE("Mobius algebra") {
    for (int i = 0; i < 200; ++i) {
        const Mobius f = random_sl2(), g = random_sl2();
        CHECK(compose(f, inverse(f)).same_map(Mobius::identity()));
        CHECK(power(f, 3).same_map(compose(f, compose(f, f))));
        for (const auto& s : testing::box_slopes(4))
            CHECK(act_on_slope(compose(f, g), s) == act_on_slope(f, act_on_slope(g, s)));
    }
    const Mobius c{1, 0, 1, -1, true};
    CHECK(formula(c) == "conj(z)/(conj(z)-1)");
    CHECK(formula(Mobius{1, 0, 5, 1}) == "z/(5z+1)");
    CHECK(formula(Mobius{-1, 0, 0, 1, true}) == "-conj(z)");
    CHECK(compose(c, c).conjugating == false);
}

TEST_CASE("Dehn twist equation about infinity") {
    const auto& p = testing::main_example();
    const auto e = twist_equation(p, Slope::inf());
    CHECK(e.inner.same_map(Mobius{1, 0, -2, 1}));
    CHECK(e.outer.same_map(Mobius{1, 0, -2, 1}));
    CHECK(e.inner_power == 5);
    CHECK(e.outer_power == 2);
    CHECK(to_string(e) == "Sigma_f . [[1,0],[-2,1]]^5 = [[1,0],[-2,1]]^2 . Sigma_f");
    CHECK(substituted(e) == "Sigma_f(z/(10z+1)) = Sigma_f(z)/(4Sigma_f(z)+1)");
}

TEST_CASE("twist equations hold on slopes") {
    const auto& p = testing::main_example();
    for (const auto& s : testing::box_slopes(4)) {
        const auto e = twist_equation(p, s);
        const Mobius lhs = power(e.inner, e.inner_power), rhs = power(e.outer, e.outer_power);
        for (const auto& t : testing::box_slopes(6)) CHECK(sigma(p, act_on_slope(lhs, t)) == act_on_slope(rhs, sigma(p, t)));
    }
}

TEST_CASE("affine elements of the main example") {
    const auto& p = testing::main_example();
    const AffineMap f = parse_affine("1,0;5,1;0,0");
    CHECK(aff_membership(p, f));
    CHECK(formula(sigma_delta2(f.linear)) == "z/(5z+1)");
    CHECK(lambda1_matrix(p, f.linear) == Mat2{1, 0, 2, 1});
    CHECK(formula(sigma_delta1(p, f)) == "z/(2z+1)");

    const AffineMap g = parse_affine("-1,0;1,1");
    CHECK(aff_membership(p, g));
    CHECK(formula(sigma_delta2(g.linear)) == "conj(z)/(conj(z)-1)");
    CHECK(formula(sigma_delta1(p, g)) == "-conj(z)");

    const AffineMap moving = parse_affine("-1,-4;0,1;0,0");
    CHECK_FALSE(stabilizes_mirrors(p, moving));
    CHECK_THROWS_AS(sigma_delta1(p, moving), MirrorsNotStabilized);

    CHECK_THROWS(parse_affine("1,0;5"));
    CHECK_THROWS(parse_affine("1,0;5,x;0,0"));
}

TEST_CASE("consistency suite") {
    const auto& p = testing::main_example();
    const std::vector<AffineMap> elements{parse_affine("1,0;5,1;0,0"), parse_affine("-1,0;1,1;0,0")};
    const auto r = consistency_suite(p, elements, 30);
    CHECK(r.checked > 1000);
    CHECK(r.ok());
    auto swapped = p;
    std::swap(swapped.correspondence.u, swapped.correspondence.v);
    CHECK_FALSE(consistency_suite(swapped, elements, 12).ok());

    const auto line = invariant_line(p, elements);
    REQUIRE(line);
    CHECK(line->first == Q(2, 5));
    CHECK(line->second == Q(1, 5));
}

TEST_CASE("reflection equations") {
    const auto& p = testing::main_example();
    const auto r = reflection_equation(p, parse_slope("2"), Slope::inf());
    CHECK(r.rho2_endpoints == std::pair<Slope, Slope>{parse_slope("-1/2"), parse_slope("0")});
    CHECK(r.rho1_endpoints == std::pair<Slope, Slope>{parse_slope("-1"), parse_slope("0")});
    try {
        reflection_equation(p, parse_slope("0"), Slope::inf());
        FAIL("expected a failed hypothesis");
    } catch (const HypothesisFailed& e) {
        CHECK(e.reason == HypothesisReason::NotBasisLambda1);
    }
    try {
        reflection_equation(testing::double_example(), parse_slope("0"), Slope::inf());
        FAIL("expected a failed hypothesis");
    } catch (const HypothesisFailed& e) {
        CHECK(e.reason == HypothesisReason::SigmaCollision);
    }
}
