#include "netmap/cli.hpp"
#include "netmap/errors.hpp"
#include "netmap/nonsep.hpp"
#include "netmap/obstruction.hpp"
#include "netmap/symmetry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <regex>

namespace netmap {

namespace {

std::string decimal(double x) {
    if (std::isinf(x)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

// Slope -> CSV fields "exact,decimal"; o has no decimal value.
std::string csv_pair(const Slope& s) { return to_string(s) + "," + (s.essential ? decimal(slope_value(s)) : ""); }

const std::vector<Slope>& table_representatives() {
    static const std::vector<Slope> reps = {
        Slope{true, 1, 1}, Slope{true, 2, 1}, Slope{true, 1, 3}, Slope{true, 1, 4},
        Slope{true, -1, 2}, Slope{true, 3, 4}, Slope{true, 7, 6}, Slope{true, 1, 8},
    };
    return reps;
}

std::string csv_row(const PullbackSummary& s) {
    std::string r = to_string(s.slope) + "," + std::to_string(s.d) + "," + std::to_string(s.d_prime);
    for (i64 c : s.coset_numbers) r += "," + std::to_string(c);
    return r + "," + std::to_string(s.essential) + "," + std::to_string(s.peripheral) + "," +
           std::to_string(s.null_homotopic) + "," + to_string(s.multiplier);
}

int cmd_analyze(const std::string& file, const std::string& slope, bool table, const std::string& format,
                std::ostream& out) {
    const auto p = load_presentation(file);
    std::vector<Slope> slopes = table ? table_representatives() : std::vector<Slope>{parse_slope(slope)};
    const bool csv = format == "csv";
    if (csv) out << "slope,d,d_prime,c1,c2,c3,c4,essential,peripheral,null,delta\n";
    for (const auto& s : slopes) {
        const auto sum = analyze_slope(p, s);
        if (csv)
            out << csv_row(sum) << '\n';
        else if (table)
            out << to_string(s) << ": " << to_string(sum) << '\n';
        else
            out << to_string(sum) << '\n';
    }
    return 0;
}

int cmd_slope(const std::string& file, const std::string& slope, i64 qmax, std::size_t orbit_len, std::ostream& out) {
    const auto p = load_presentation(file);
    if (qmax > 0) {
        std::vector<Slope> all;
        for (i64 q = 1; q <= qmax; ++q)
            for (i64 num = -qmax; num <= qmax; ++num)
                if (std::gcd(num, q) == 1) all.push_back(Slope{true, num, q});
        std::stable_sort(all.begin(), all.end(), [](const Slope& a, const Slope& b) {
            return Q(a.p, a.q) < Q(b.p, b.q);
        });
        all.push_back(Slope::inf());
        out << "slope,value,sigma,sigma_value\n";
        for (const auto& s : all) out << csv_pair(s) << "," << csv_pair(sigma(p, s)) << '\n';
        return 0;
    }
    const Slope s = parse_slope(slope);
    if (orbit_len > 0) {
        const auto o = orbit(p, s, orbit_len);
        for (std::size_t k = 0; k < o.trajectory.size(); ++k) out << (k ? " -> " : "") << to_string(o.trajectory[k]);
        out << '\n';
        if (o.cycle) out << "cycle start=" << o.cycle->first << " length=" << o.cycle->second << '\n';
        return 0;
    }
    out << to_string(sigma(p, s)) << '\n';
    return 0;
}

std::vector<Slope> parse_slope_list(const std::string& text) {
    std::vector<Slope> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_slope(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

int cmd_obstructions(const std::string& file, i64 height, std::size_t budget, const std::string& slopes,
                     const std::string& svg, std::ostream& out) {
    const auto p = load_presentation(file);
    const auto v = slopes.empty() ? obstruction_report(p, height, budget)
                                  : obstruction_report(p, height, parse_slope_list(slopes));
    out << summary_line(v) << '\n';
    for (const auto& h : v.certificate)
        out << "  " << to_string(h.slope) << " -> " << to_string(h.image) << " delta=" << to_string(h.delta)
            << " " << to_string(h.kind) << " C=" << to_string(h.center)
            << (h.kind == HalfSpaceKind::InsideCircle || h.kind == HalfSpaceKind::OutsideCircle
                    ? " R^2=" + to_string(h.radius_squared())
                    : std::string())
            << '\n';
    for (const auto& l : v.leftovers)
        out << "  leftover " << (l.point.point ? to_string(*l.point.point) : std::string("inf")) << ": " << l.reason
            << '\n';
    for (const auto& d : v.diagnostics) out << "  note: " << d << '\n';
    if (!svg.empty()) {
        std::ofstream f(svg);
        if (!f) throw std::invalid_argument("cannot write " + svg);
        f << render_svg(v);
    }
    return 0;
}

int cmd_equations(const std::string& file, const std::string& slope, const std::string& affine, i64 check,
                  std::ostream& out) {
    const auto p = load_presentation(file);
    std::vector<AffineMap> elements;
    if (!affine.empty()) {
        const AffineMap f = parse_affine(affine);
        if (!aff_membership(p, f)) throw std::invalid_argument("affine map is not in Aff(f)");
        const Mobius s2 = sigma_delta2(f.linear);
        const Mobius s1 = sigma_delta1(p, f);
        out << "Sigma_f . (" << formula(s2) << ") = (" << formula(s1) << ") . Sigma_f\n";
        out << "Lambda1 matrix " << to_string(lambda1_matrix(p, f.linear)) << '\n';
        elements.push_back(f);
    } else if (!slope.empty()) {
        const auto eq = twist_equation(p, parse_slope(slope));
        out << to_string(eq) << '\n' << substituted(eq) << '\n';
    }
    if (check > 0) {
        const auto r = consistency_suite(p, elements, check);
        out << "consistency height=" << check << " checked=" << r.checked << " violations=" << r.violations.size()
            << '\n';
        for (const auto& v : r.violations) out << "  " << v << '\n';
    }
    return 0;
}

std::array<IntVec2, 4> parse_four(const std::string& text) {
    static const std::regex item(R"(\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
    std::array<IntVec2, 4> reps;
    std::size_t k = 0, start = 0;
    while (start <= text.size()) {
        auto semi = text.find(';', start);
        if (semi == std::string::npos) semi = text.size();
        std::smatch m;
        const std::string part = text.substr(start, semi - start);
        if (k == 4 || !std::regex_match(part, m, item)) throw std::invalid_argument("bad subset '" + text + "'");
        reps[k++] = {std::stoll(m[1]), std::stoll(m[2])};
        start = semi + 1;
    }
    if (k != 4) throw std::invalid_argument("need four representatives");
    return reps;
}

void print_witness(const NonsepResult& r, std::ostream& out) {
    const auto& c = *r.witness;
    out << "SEPARATING B=<" << to_string(c.generator_b) << "> a=" << to_string(c.a) << " c=(" << r.witness_numbers[0]
        << "," << r.witness_numbers[1] << "," << r.witness_numbers[2] << "," << r.witness_numbers[3] << ")\n";
}

int cmd_nonsep(const std::string& target, const std::string& check, bool search, bool refute, std::ostream& out) {
    if (refute) {
        const auto rep = degree2_refutation();
        const FinAbGroup A(4, 2);
        for (const auto& e : rep.entries)
            out << to_string(A, e.H) << " order4=" << (e.has_order4_classes ? "yes" : "no")
                << " one_of_2A=" << (e.one_of_2A ? "yes" : "no") << '\n';
        out << "realizable=" << rep.realizable << '\n';
        return 0;
    }
    static const std::regex group(R"((\d+),(\d+))");
    std::smatch m;
    if (std::regex_match(target, m, group)) {
        const FinAbGroup A(std::stoll(m[1]), std::stoll(m[2]));
        if (search) {
            const auto found = search_nonseparating(A);
            for (const auto& H : found) out << to_string(A, H) << '\n';
            out << "count=" << found.size() << '\n';
            return 0;
        }
        if (check.empty()) throw std::invalid_argument("nonsep needs --check, --search or --refute");
        const auto H = make_symmetric_four(A, parse_four(check));
        const auto r = check_nonseparating(A, H);
        if (r.nonseparating)
            out << "NONSEPARATING\n";
        else
            print_witness(r, out);
        return 0;
    }
    const auto p = load_presentation(target);
    const auto [A, H] = postcritical_group(p);
    out << "A=Z/" << A.m << "+Z/" << A.n << " H=" << to_string(A, H) << '\n';
    const auto r = check_nonseparating(A, H);
    if (r.nonseparating)
        out << "NONSEPARATING\n";
    else
        print_witness(r, out);
    return 0;
}

} // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"NET map slope, obstruction and symmetry computations"};
    app.require_subcommand(1);

    std::string file, slope, format = "text", svg, affine, slopes, check_set;
    bool table = false, search = false, refute = false;
    i64 qmax = 0, height = 20, check = 0;
    std::size_t budget = 8, orbit_len = 0;

    auto* analyze = app.add_subcommand("analyze", "pullback summary for a slope");
    analyze->add_option("file", file)->required();
    auto* a_slope = analyze->add_option("--slope", slope);
    auto* a_table = analyze->add_flag("--table", table, "the eight residue class representatives");
    a_slope->excludes(a_table);
    analyze->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* slope_cmd = app.add_subcommand("slope", "evaluate the slope function");
    slope_cmd->add_option("file", file)->required();
    auto* s_slope = slope_cmd->add_option("slope", slope);
    auto* s_graph = slope_cmd->add_option("--graph", qmax, "CSV over all p/q with |p|, q <= QMAX");
    slope_cmd->add_option("--orbit", orbit_len, "iterate the slope function");
    s_slope->excludes(s_graph);

    auto* obst = app.add_subcommand("obstructions", "search for obstructions or a half-space certificate");
    obst->add_option("file", file)->required();
    obst->add_option("--height", height);
    obst->add_option("--budget", budget);
    obst->add_option("--slopes", slopes, "comma separated candidate slopes");
    obst->add_option("--svg", svg);

    auto* eqs = app.add_subcommand("equations", "functional equations");
    eqs->add_option("file", file)->required();
    auto* e_slope = eqs->add_option("slope", slope);
    auto* e_aff = eqs->add_option("--affine", affine, "a,b;c,d;tx,ty");
    eqs->add_option("--check", check, "run the consistency suite to this height");
    e_slope->excludes(e_aff);

    auto* nonsep = app.add_subcommand("nonsep", "nonseparating subsets of Z/m + Z/n");
    nonsep->add_option("target", file, "m,n or a presentation file");
    nonsep->add_option("--check", check_set, "(x,y);(x,y);(x,y);(x,y)");
    nonsep->add_flag("--search", search);
    nonsep->add_flag("--refute", refute);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            if (slope.empty() && !table) throw std::invalid_argument("analyze needs --slope or --table");
            return cmd_analyze(file, slope, table, format, out);
        }
        if (slope_cmd->parsed()) {
            if (slope.empty() && qmax <= 0) throw std::invalid_argument("slope needs a slope or --graph");
            return cmd_slope(file, slope, qmax, orbit_len, out);
        }
        if (obst->parsed()) return cmd_obstructions(file, height, budget, slopes, svg, out);
        if (eqs->parsed()) {
            if (slope.empty() && affine.empty() && check <= 0)
                throw std::invalid_argument("equations needs a slope or --affine");
            return cmd_equations(file, slope, affine, check, out);
        }
        if (nonsep->parsed()) {
            if (file.empty() && !refute) throw std::invalid_argument("nonsep needs m,n or a file");
            return cmd_nonsep(file, check_set, search, refute, out);
        }
    } catch (const NonTransverse& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const DegenerateIncidence& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const MirrorsNotStabilized& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace netmap
