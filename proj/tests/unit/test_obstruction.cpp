#include "netmap/obstruction.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace netmap;

namespace {

std::vector<Slope> slopes(std::initializer_list<const char*> xs) {
    std::vector<Slope> out;
    for (const char* x : xs) out.push_back(parse_slope(x));
    return out;
}

std::set<Slope> certificate_slopes(const ObstructionVerdict& v) {
    std::set<Slope> out;
    for (const auto& h : v.certificate) out.insert(h.slope);
    return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("slope enumeration") {
    const auto all = enumerate_slopes(7);
    std::set<Slope> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    std::size_t expected = 0;
    for (const auto& s : testing::box_slopes(7)) expected += height(s) <= 7;
    CHECK(all.size() == expected);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(height(all[i - 1]) <= height(all[i]));
}

TEST_CASE("main example is unobstructed") {
    const auto& p = testing::main_example();
    const auto v = obstruction_report(p, 20, 8);
    CHECK(v.kind == VerdictKind::Unobstructed);
    CHECK(summary_line(v) == "UNOBSTRUCTED (6 half-spaces)");
    CHECK(v.considered.size() == 8);
    CHECK(certificate_slopes(v) == std::set<Slope>{parse_slope("-1/2"), parse_slope("1/2"), parse_slope("1/3"),
                                                   parse_slope("1/4"), parse_slope("1/8"), parse_slope("-1/12")});
    CHECK(verify_certificate(p, v).empty());
    const auto fixed = find_fixed_slopes(p, 20);
    CHECK(fixed.size() == 2);
    for (const auto& f : fixed) {
        CHECK(sigma(p, f.slope) == f.slope);
        CHECK(f.multiplier < Q(1));
    }
}

TEST_CASE("explicit slope families from the half-space table") {
    const auto& p = testing::main_example();
    const auto eight = slopes({"-1/2", "-1/4", "1/8", "1/4", "1/3", "7/16", "1/2", "3/4"});
    const auto six = slopes({"-1/4", "1/8", "1/4", "1/3", "1/2", "3/4"});
    for (const auto& family : {eight, six}) {
        const auto v = obstruction_report(p, 20, family);
        CHECK(v.kind == VerdictKind::Unobstructed);
        CHECK(verify_certificate(p, v).empty());
    }
}

TEST_CASE("tampered certificates are rejected") {
    const auto& p = testing::main_example();
    auto v = obstruction_report(p, 20, 8);
    REQUIRE(v.kind == VerdictKind::Unobstructed);
    for (std::size_t drop = 0; drop < v.certificate.size(); ++drop) {
        auto w = v;
        w.certificate.erase(w.certificate.begin() + drop);
        CHECK_FALSE(verify_certificate(p, w).empty());
    }
    auto bad = v;
    bad.certificate[0].center += 1;
    CHECK_FALSE(verify_certificate(p, bad).empty());
}

TEST_CASE("small budgets are inconclusive") {
    const auto& p = testing::main_example();
    for (std::size_t b : {1u, 2u, 3u}) {
        const auto v = obstruction_report(p, 20, b);
        CHECK(v.kind == VerdictKind::Inconclusive);
        CHECK(summary_line(v).rfind("INCONCLUSIVE", 0) == 0);
        CHECK(v.considered.size() <= b);
    }
}

TEST_CASE("other presentations") {
    const auto l = obstruction_report(testing::lattes_example(), 10, 8);
    CHECK(l.kind == VerdictKind::Obstructed);
    CHECK(summary_line(l) == "OBSTRUCTED slope=-1 delta=1");
    CHECK(sigma(testing::lattes_example(), l.slope) == l.slope);
    CHECK(multiplier(testing::lattes_example(), l.slope) >= Q(1));
    const auto d = obstruction_report(testing::double_example(), 10, 8);
    CHECK(d.kind == VerdictKind::Inconclusive);
    CHECK(d.considered.empty());
}

TEST_CASE("svg output") {
    const auto& p = testing::main_example();
    const auto v = obstruction_report(p, 20, 8);
    const std::string svg = render_svg(v);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<circle") + count(svg, "<line") == 8);
    CHECK(svg == render_svg(obstruction_report(p, 20, 8)));
}
