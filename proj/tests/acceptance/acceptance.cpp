// One line per acceptance criterion. Exit status is the number of failures.

#include "netmap/nonsep.hpp"
#include "netmap/obstruction.hpp"
#include "netmap/symmetry.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

using namespace netmap;
using testing::frac;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

Slope S(const char* s) { return parse_slope(s); }

Outcome table1() {
    struct Row {
        const char* s;
        i64 d;
        std::array<i64, 4> c;
        i64 ess, per, null;
    };
    const Row rows[] = {
        {"1", 10, {0, 0, 1, 1}, 1, 0, 0},   {"2", 2, {0, 1, 4, 5}, 3, 2, 0},
        {"1/3", 2, {0, 2, 3, 5}, 1, 4, 0},  {"1/4", 5, {0, 0, 2, 2}, 2, 0, 0},
        {"-1/2", 1, {0, 2, 8, 10}, 6, 4, 0}, {"3/4", 1, {0, 0, 6, 6}, 6, 0, 4},
        {"7/6", 1, {0, 4, 6, 10}, 2, 8, 0}, {"1/8", 1, {0, 0, 2, 2}, 2, 0, 8},
    };
    Outcome o;
    std::set<std::pair<i64, i64>> classes;
    for (const auto& r : rows) {
        const Slope s = S(r.s);
        classes.insert({mod_pos(s.q, 20), mod_pos(2 * s.p + s.q, 5)});
        const auto sum = analyze_slope(testing::main_example(), s);
        o.require(sum.d == r.d && sum.coset_numbers == r.c && sum.essential == r.ess &&
                      sum.peripheral == r.per && sum.null_homotopic == r.null,
                  std::string("row ") + r.s + ": " + to_string(sum));
    }
    o.require(classes.size() == 8, "representatives do not cover 8 classes");
    return o;
}

Outcome table2() {
    struct Row {
        const char* s;
        IntVec2 v;
        i64 k;
    };
    // one slope per row of the segment table, in row order
    const Row rows[] = {{"3/4", {0, 0}, 1}, {"1/4", {0, 0}, 5}, {"-1/2", {2, 0}, 2}, {"1/2", {0, 0}, 3},
                        {"3/2", {0, 0}, 1}, {"7", {2, 0}, 4},   {"0", {0, 0}, 2},   {"1", {0, 0}, 6}};
    Outcome o;
    const auto& p = testing::main_example();
    const Basis2 twice{2 * p.lambda1.u, 2 * p.lambda1.v};
    for (const auto& r : rows) {
        const Slope s = S(r.s);
        const auto [v, w] = find_segment(p, s);
        o.require(w - v == r.k * s.vec() && in_lattice(v - r.v, twice),
                  std::string("slope ") + r.s + " v=" + to_string(v) + " w=" + to_string(w));
    }
    return o;
}

Outcome oracle() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& s : testing::box_slopes(50)) {
        ++n;
        const Slope a = sigma(testing::main_example(), s), b = sigma_main_closed_form(s);
        o.require(a == b, to_string(s) + ": " + to_string(a) + " vs " + to_string(b));
    }
    o.detail = o.ok ? std::to_string(n) + " slopes" : o.detail;
    return o;
}

const std::vector<std::pair<const char*, const char*>> table3_images = {
    {"-1/2", "0"}, {"-1/4", "1/6"}, {"1/8", "1/4"}, {"1/4", "1/2"},
    {"1/3", "0"},  {"7/16", "1/4"}, {"1/2", "1/3"}, {"3/4", "1/2"}};

Outcome worked() {
    Outcome o;
    const auto& p = testing::main_example();
    o.require(sigma(p, S("1/4")) == S("1/2"), "sigma(1/4)");
    o.require(sigma(p, S("3/2")) == S("1"), "sigma(3/2)");
    o.require(sigma(p, S("inf")) == S("inf"), "sigma(inf)");
    for (const auto& [a, b] : table3_images) o.require(sigma(p, S(a)) == S(b), std::string("sigma(") + a + ")");
    return o;
}

Outcome identities() {
    Outcome o;
    const auto& p = testing::main_example();
    auto shift = [](const Slope& s, i64 c) {
        return (!s.essential || s.is_inf()) ? s : slope_normalize(s.p + c * s.q, s.q);
    };
    auto neg = [](const Slope& s) { return (!s.essential || s.is_inf()) ? s : slope_normalize(-s.p, s.q); };
    for (const auto& s : testing::box_slopes(50)) {
        o.require(sigma(p, shift(s, 5)) == shift(sigma(p, s), 2), "x+5 at " + to_string(s));
        o.require(sigma(p, neg(shift(s, 1))) == neg(sigma(p, s)), "-x-1 at " + to_string(s));
    }
    return o;
}

Outcome table3() {
    struct Row {
        const char* s;
        Rational c, r2;
        bool bounded;
    };
    const Row rows[] = {{"-1/2", 2, 6, true},
                        {"-1/4", frac(32, 3), frac(1000, 9), true},
                        {"1/8", 0, 32, false},
                        {"1/4", frac(-16, 3), frac(40, 9), true},
                        {"1/3", -3, frac(1, 2), true},
                        {"7/16", frac(-88, 43), frac(864, 1849), true},
                        {"1/2", frac(-4, 3), frac(10, 9), true},
                        {"3/4", 0, frac(8, 3), true}};
    Outcome o;
    for (const auto& r : rows) {
        const auto h = halfspace_for(testing::main_example(), S(r.s));
        o.require(h && h->center == r.c && h->radius_squared() == r.r2 && h->bounded() == r.bounded,
                  std::string("row ") + r.s);
    }
    return o;
}

Outcome certificate() {
    Outcome o;
    const auto& p = testing::main_example();
    std::vector<Slope> eight, six;
    for (const auto& [a, b] : table3_images) {
        eight.push_back(S(a));
        if (std::string(a) != "7/16" && std::string(a) != "-1/2") six.push_back(S(a));
    }
    for (const auto* family : {&eight, &six}) {
        const auto v = obstruction_report(p, 20, *family);
        o.require(v.kind == VerdictKind::Unobstructed, std::to_string(family->size()) + " slopes: " + summary_line(v));
        o.require(verify_certificate(p, v).empty(), std::to_string(family->size()) + " slopes: certificate rejected");
    }
    const auto b = obstruction_report(p, 20, 8);
    o.require(summary_line(b) == "UNOBSTRUCTED (6 half-spaces)" && verify_certificate(p, b).empty(),
              "budget 8: " + summary_line(b));
    return o;
}

Outcome twist() {
    Outcome o;
    const auto e = twist_equation(testing::main_example(), Slope::inf());
    const Mobius phi{1, 0, -2, 1};
    o.require(e.inner_power == 5 && e.outer_power == 2 && e.inner.same_map(phi) && e.outer.same_map(phi),
              to_string(e));
    o.require(substituted(e) == "Sigma_f(z/(10z+1)) = Sigma_f(z)/(4Sigma_f(z)+1)", substituted(e));
    std::uniform_int_distribution<i64> coord(-1000, 1000);
    int done = 0;
    while (done < 1000) {
        const i64 p = coord(testing::rng()), q = coord(testing::rng());
        if (std::gcd(p, q) != 1) continue;
        ++done;
        // r, s with p s - q r = 1
        i64 r0 = p, r1 = -q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const i64 k = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
        }
        if (r0 < 0) s0 = -s0, t0 = -t0;
        const Mat2 C{-q, -s0, p, t0};
        const Mat2 T = C * Mat2{1, 2, 0, 1} * C.adj();
        const Mat2 expected{1 + 2 * p * q, 2 * q * q, -2 * p * p, 1 - 2 * p * q};
        o.require(C.det() == 1 && T == expected && twist_matrix(slope_normalize(p, q)).same_map(Mobius{T.a, T.b, T.c, T.d}),
                  "p/q = " + std::to_string(p) + "/" + std::to_string(q));
    }
    return o;
}

Outcome affine() {
    Outcome o;
    const auto& p = testing::main_example();
    const AffineMap f = parse_affine("1,0;5,1;0,0"), g = parse_affine("-1,0;1,1;0,0");
    o.require(formula(sigma_delta2(f.linear)) == "z/(5z+1)", "first example, delta2");
    o.require(lambda1_matrix(p, f.linear) == Mat2{1, 0, 2, 1}, "first example, Lambda1 matrix");
    o.require(formula(sigma_delta2(g.linear)) == "conj(z)/(conj(z)-1)", "second example, delta2");
    o.require(formula(sigma_delta1(p, g)) == "-conj(z)", "second example, delta1");
    const auto r = consistency_suite(p, {f, g}, 30);
    o.require(r.ok(), r.ok() ? "" : r.violations.front());
    if (o.ok) o.detail = std::to_string(r.checked) + " checks";
    return o;
}

Outcome nonseparating() {
    Outcome o;
    {
        const FinAbGroup A(4, 2);
        const auto H = make_symmetric_four(A, {IntVec2{0, 0}, {1, 0}, {2, 0}, {1, 1}});
        std::set<std::array<i64, 4>> seen;
        for (const auto& c : cyclic_pairs(A)) seen.insert(coset_numbers_group(A, H, c));
        o.require(seen == std::set<std::array<i64, 4>>{{0, 0, 0, 1}, {0, 1, 1, 2}} && is_nonseparating(A, H),
                  "degree two example");
    }
    {
        const FinAbGroup A(6, 6);
        const auto H = make_symmetric_four(A, {IntVec2{2, 0}, {0, 2}, {2, 2}, {2, 4}});
        bool all = true;
        for (const auto& c : cyclic_pairs(A)) all = all && coset_numbers_group(A, H, c) == std::array<i64, 4>{0, 2, 2, 2};
        o.require(all && is_nonseparating(A, H), "degree nine example");
    }
    // translation lemma over every subset of small groups
    for (auto [m, n] : std::vector<std::pair<i64, i64>>{{2, 2}, {4, 2}, {4, 4}, {2, 6}, {2, 8}, {6, 6}}) {
        const FinAbGroup A(m, n);
        for (const auto& H : search_nonseparating(A))
            for (i64 i = 0; i < A.order(); ++i)
                if (A.mul(2, A.element(i)) == IntVec2{0, 0})
                    o.require(is_nonseparating(A, translate_by_involution(A, H, A.element(i))),
                              "translation in Z/" + std::to_string(m) + "+Z/" + std::to_string(n));
    }
    // subgroup lemma through (x, y) -> (x, 2y)
    for (auto [m, n] : std::vector<std::pair<i64, i64>>{{4, 2}, {6, 6}, {2, 4}}) {
        const FinAbGroup S(m, n), A(m, 2 * n);
        for (const auto& H : search_nonseparating(S)) {
            std::array<IntVec2, 4> img;
            for (int k = 0; k < 4; ++k) img[k] = {H.reps[k].x, 2 * H.reps[k].y};
            o.require(is_nonseparating(A, make_symmetric_four(A, img)), "subgroup lemma");
        }
    }
    for (i64 d : {3, 5, 7, 15})
        o.require(verify_nonexistence(FinAbGroup(2, 2 * d)), "nonexistence for d=" + std::to_string(d));
    o.require(degree2_refutation().realizable == 0, "degree two refutation");
    o.require(constant_teich_check(testing::double_example()), "double example");
    o.require(!constant_teich_check(testing::main_example()), "main example");
    return o;
}

Outcome horoballs() {
    Outcome o;
    auto horo = [](const GaussQ& z, i64 p, i64 q) -> Rational {
        const Rational re = Rational(q) * z.x - p, im = Rational(q) * z.y;
        return z.y / (re * re + im * im);
    };
    std::uniform_int_distribution<i64> num(-50, 50), den(1, 15), pos(1, 50), coord(-9, 9);
    auto& g = testing::rng();
    for (int i = 0; i < 100; ++i) {
        const GaussQ z{frac(num(g), den(g)), frac(pos(g), den(g))};
        i64 p = coord(g), q = coord(g);
        if (std::gcd(p, q) != 1) p = 1, q = 0;
        const Rational base = horo(z, p, q);
        const Rational n2 = z.x * z.x + z.y * z.y;
        o.require(horo({-z.x, z.y}, p, -q) == base, "z -> -conj(z)");
        o.require(horo({z.x + 1, z.y}, p + q, q) == base, "z -> z+1");
        o.require(horo({-z.x / n2, z.y / n2}, -q, p) == base, "z -> -1/z");
    }
    for (const auto& [a, b] : table3_images) {
        const Slope s = S(a), t = S(b);
        if (s.p == 0 || t.p == 0) continue;
        const auto h = halfspace_for(testing::main_example(), s);
        o.require(h && h->radius_squared() == (h->center + frac(s.q, s.p)) * (h->center + frac(t.q, t.p)),
                  std::string("radius identity at ") + a);
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds, 0 for none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "pullback table for 8 residue classes", 1, table1},
        {2, "segment table for 8 rows", 1, table2},
        {3, "slope function equals closed form, |p|,|q| <= 50", 10, oracle},
        {4, "worked slope values and half-space images", 0, worked},
        {5, "x+5 and -x-1 identities, |p|,|q| <= 50", 0, identities},
        {6, "half-space centers, radii and kinds", 1, table3},
        {7, "no-obstruction certificates", 5, certificate},
        {8, "Dehn twist equation and conjugation identity", 0, twist},
        {9, "affine functional equations and consistency to height 30", 0, affine},
        {10, "nonseparating subset suite", 30, nonseparating},
        {11, "horoball equivariance and radius identity", 0, horoballs},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.limit == 0 || secs < c.limit;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("[%s] %2d %s (%.3f s%s%s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit > 0 ? ", limit " : "", c.limit > 0 ? (std::to_string(static_cast<int>(c.limit)) + " s").c_str() : "",
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
