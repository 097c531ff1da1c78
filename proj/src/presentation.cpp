#include "netmap/presentation.hpp"
#include "netmap/errors.hpp"
#include "geometry.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace netmap {

std::string to_string(const QVec2& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

const char* to_string(CosetTag t) {
    switch (t) {
    case CosetTag::P1andP2: return "P1&P2";
    case CosetTag::P1only: return "P1-P2";
    case CosetTag::P2only: return "P2-P1";
    }
    return "?";
}

IntVec2 MirrorArc::terminal() const {
    if (half_path.empty()) return midpoint;
    const QVec2& t = half_path.back();
    return {t.x.numerator(), t.y.numerator()};
}

std::vector<QVec2> MirrorArc::full() const {
    std::vector<QVec2> out;
    QVec2 m = QVec2::of(midpoint);
    QVec2 twice{m.x * 2, m.y * 2};
    for (auto it = half_path.rbegin(); it != half_path.rend(); ++it) out.push_back(twice - *it);
    out.push_back(m);
    for (const auto& q : half_path) out.push_back(q);
    return out;
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<QVec2> parse_points(const std::string& text, int line) {
    static const std::regex point(R"(\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\))");
    std::vector<QVec2> out;
    std::string rest = text;
    std::smatch m;
    std::string leftover;
    auto begin = std::sregex_iterator(text.begin(), text.end(), point);
    std::size_t last = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        leftover += text.substr(last, it->position() - last);
        last = it->position() + it->length();
        try {
            out.push_back({parse_q((*it)[1]), parse_q((*it)[2])});
        } catch (const std::exception&) {
            throw SyntaxError(line, "bad coordinate in '" + it->str() + "'");
        }
    }
    leftover += text.substr(last);
    if (!strip(leftover).empty()) throw SyntaxError(line, "unexpected text '" + strip(leftover) + "'");
    return out;
}

IntVec2 integral(const QVec2& v, int line) {
    if (v.x.denominator() != 1 || v.y.denominator() != 1)
        throw SyntaxError(line, "expected an integer point, got " + to_string(v));
    return {v.x.numerator(), v.y.numerator()};
}

std::vector<IntVec2> parse_int_points(const std::string& text, std::size_t count, int line) {
    auto pts = parse_points(text, line);
    if (pts.size() != count)
        throw SyntaxError(line, "expected " + std::to_string(count) + " points, got " + std::to_string(pts.size()));
    std::vector<IntVec2> out;
    for (const auto& p : pts) out.push_back(integral(p, line));
    return out;
}

bool same_class(const IntVec2& a, const IntVec2& b, const Basis2& twoL1) { return in_lattice(a - b, twoL1); }

i64 lcm_den(const std::vector<QVec2>& pts) {
    i64 L = 1;
    for (const auto& p : pts) L = std::lcm(L, std::lcm(p.x.denominator(), p.y.denominator()));
    return L;
}

detail::P128 scaled(const QVec2& p, i64 L) {
    return {static_cast<i128>(p.x.numerator()) * (L / p.x.denominator()),
            static_cast<i128>(p.y.numerator()) * (L / p.y.denominator())};
}

void check_simple(const std::vector<detail::P128>& poly, int k) {
    const std::string name = "mirror " + std::to_string(k) + " is not a simple arc";
    for (std::size_t a = 0; a + 1 < poly.size(); ++a)
        if (poly[a] == poly[a + 1]) throw ValidationError("mirror " + std::to_string(k) + " repeats a vertex");
    for (std::size_t a = 0; a + 1 < poly.size(); ++a) {
        for (std::size_t b = a + 1; b + 1 < poly.size(); ++b) {
            if (b == a + 1) {
                auto e1 = poly[a + 1] - poly[a], e2 = poly[b + 1] - poly[b];
                if (detail::cross(e1, e2) == 0 && detail::dot(e1, e2) < 0) throw ValidationError(name);
                continue;
            }
            if (detail::segments_touch(poly[a], poly[a + 1], poly[b], poly[b + 1])) throw ValidationError(name);
        }
    }
}

bool polylines_touch(const std::vector<detail::P128>& A, const std::vector<detail::P128>& B) {
    if (A.size() == 1 && B.size() == 1) return A[0] == B[0];
    if (A.size() == 1) return polylines_touch(B, A);
    for (std::size_t a = 0; a + 1 < A.size(); ++a) {
        if (B.size() == 1) {
            if (detail::segments_touch(A[a], A[a + 1], B[0], B[0])) return true;
            continue;
        }
        for (std::size_t b = 0; b + 1 < B.size(); ++b)
            if (detail::segments_touch(A[a], A[a + 1], B[b], B[b + 1])) return true;
    }
    return false;
}

void check_disjoint(const NetMapPresentation& p) {
    std::vector<std::vector<QVec2>> full;
    std::vector<QVec2> all;
    for (const auto& m : p.mirrors) {
        full.push_back(m.full());
        all.insert(all.end(), full.back().begin(), full.back().end());
    }
    const i64 L = lcm_den(all);
    std::vector<std::vector<detail::P128>> S;
    for (const auto& f : full) {
        S.emplace_back();
        for (const auto& q : f) S.back().push_back(scaled(q, L));
    }
    const Basis2 E{2 * p.lambda1.u, 2 * p.lambda1.v};
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            // Translates t of mirror j whose bounding box meets that of mirror i.
            i128 ix0 = S[i][0].x, ix1 = ix0, iy0 = S[i][0].y, iy1 = iy0;
            for (auto& q : S[i]) ix0 = std::min(ix0, q.x), ix1 = std::max(ix1, q.x), iy0 = std::min(iy0, q.y), iy1 = std::max(iy1, q.y);
            i128 jx0 = S[j][0].x, jx1 = jx0, jy0 = S[j][0].y, jy1 = jy0;
            for (auto& q : S[j]) jx0 = std::min(jx0, q.x), jx1 = std::max(jx1, q.x), jy0 = std::min(jy0, q.y), jy1 = std::max(jy1, q.y);
            std::vector<detail::P128> box{{ix0 - jx1, iy0 - jy1}, {ix1 - jx0, iy0 - jy1}, {ix0 - jx1, iy1 - jy0}, {ix1 - jx0, iy1 - jy0}};
            for (const auto& ij : detail::lattice_points_in_hull(E, L, box)) {
                if (i == j && ij.x == 0 && ij.y == 0) continue;
                IntVec2 t = ij.x * E.u + ij.y * E.v;
                std::vector<detail::P128> moved;
                for (auto q : S[j]) moved.push_back({q.x + static_cast<i128>(t.x) * L, q.y + static_cast<i128>(t.y) * L});
                if (polylines_touch(S[i], moved))
                    throw ValidationError("mirrors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                          " meet after translation by " + to_string(t));
            }
        }
    }
}

} // namespace

void validate(const NetMapPresentation& p) {
    const i64 D = p.lambda1.det();
    if (std::abs(D) < 2) throw ValidationError("degree < 2");
    const Basis2 twoL1{2 * p.lambda1.u, 2 * p.lambda1.v};

    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
            if (same_class(p.postcritical[k], p.postcritical[l], twoL1) ||
                same_class(p.postcritical[k], -p.postcritical[l], twoL1))
                throw ValidationError("inverse pairs not distinct (postcritical " + std::to_string(k + 1) + " and " +
                                      std::to_string(l + 1) + ")");

    if (!in_lattice(p.correspondence.u, p.lambda1) || !in_lattice(p.correspondence.v, p.lambda1))
        throw ValidationError("correspondence vectors not in Lambda1");
    if (std::abs(p.correspondence.det()) != std::abs(D))
        throw ValidationError("correspondence is not a basis of Lambda1");

    for (int k = 0; k < 4; ++k) {
        const auto& m = p.mirrors[k];
        const std::string tag = "mirror " + std::to_string(k + 1);
        if (!in_lattice(m.midpoint, p.lambda1)) throw ValidationError(tag + " midpoint not in Lambda1");
        const IntVec2 h = p.postcritical[k];
        if (m.degenerate()) {
            if (!in_lattice(h, p.lambda1)) throw ValidationError(tag + " is degenerate but h not in Lambda1");
            if (!same_class(m.midpoint, h, twoL1)) throw ValidationError(tag + " is degenerate but midpoint not in class of h");
        } else {
            const QVec2& t = m.half_path.back();
            if (t.x.denominator() != 1 || t.y.denominator() != 1) throw ValidationError(tag + " terminal not in Lambda2");
            IntVec2 ti = m.terminal();
            if (!same_class(ti, h, twoL1) && !same_class(ti, -h, twoL1))
                throw ValidationError(tag + " terminal not in the class of +-h");
        }
    }
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
            if (same_class(p.mirrors[k].midpoint, p.mirrors[l].midpoint, twoL1))
                throw ValidationError("mirror midpoints not distinct modulo 2*Lambda1");

    for (int k = 0; k < 4; ++k) {
        auto f = p.mirrors[k].full();
        const i64 L = lcm_den(f);
        std::vector<detail::P128> poly;
        for (const auto& q : f) poly.push_back(scaled(q, L));
        check_simple(poly, k + 1);
    }
    check_disjoint(p);
}

NetMapPresentation parse_presentation(const std::string& text) {
    NetMapPresentation p;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::set<std::string> seen;
    std::set<int> mirrors_seen;
    static const std::regex mirror_key(R"(mirror\s+([1-4]))");
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string s = strip(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) throw SyntaxError(line, "expected 'key = value'");
        std::string key = strip(s.substr(0, eq)), value = strip(s.substr(eq + 1));
        std::smatch mk;
        if (std::regex_match(key, mk, mirror_key)) {
            int k = std::stoi(mk[1]) - 1;
            if (!mirrors_seen.insert(k).second) throw SyntaxError(line, "duplicate " + key);
            auto colon = value.find(':');
            if (colon == std::string::npos) throw SyntaxError(line, "mirror needs 'midpoint : path'");
            auto mid = parse_int_points(value.substr(0, colon), 1, line);
            MirrorArc arc;
            arc.midpoint = mid[0];
            std::string path = strip(value.substr(colon + 1));
            if (path != "degenerate") {
                arc.half_path = parse_points(path, line);
                if (arc.half_path.empty()) throw SyntaxError(line, "empty mirror path (write 'degenerate')");
            }
            p.mirrors[k] = arc;
            continue;
        }
        if (!seen.insert(key).second) throw SyntaxError(line, "duplicate key '" + key + "'");
        if (key == "name") {
            p.name = value;
        } else if (key == "lambda1") {
            auto v = parse_int_points(value, 2, line);
            p.lambda1 = {v[0], v[1]};
            if (p.lambda1.det() == 0) throw SyntaxError(line, "lambda1 vectors are dependent");
        } else if (key == "correspondence") {
            auto v = parse_int_points(value, 2, line);
            p.correspondence = {v[0], v[1]};
        } else if (key == "postcritical") {
            auto v = parse_int_points(value, 4, line);
            for (int k = 0; k < 4; ++k) p.postcritical[k] = v[k];
        } else {
            throw SyntaxError(line, "unknown key '" + key + "'");
        }
    }
    for (const char* k : {"lambda1", "postcritical", "correspondence"})
        if (!seen.count(k)) throw SyntaxError(line, std::string("missing '") + k + "'");
    if (mirrors_seen.size() != 4) throw SyntaxError(line, "expected mirrors 1 to 4");
    validate(p);
    return p;
}

NetMapPresentation load_presentation(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
}

std::string serialize(const NetMapPresentation& p) {
    std::ostringstream os;
    os << "name = " << p.name << "\n";
    os << "lambda1 = " << p.lambda1.u << " " << p.lambda1.v << "\n";
    os << "postcritical =";
    for (const auto& h : p.postcritical) os << " " << h;
    os << "\ncorrespondence = " << p.correspondence.u << " " << p.correspondence.v << "\n";
    for (int k = 0; k < 4; ++k) {
        os << "mirror " << k + 1 << " = " << p.mirrors[k].midpoint << " :";
        if (p.mirrors[k].degenerate()) os << " degenerate";
        for (const auto& q : p.mirrors[k].half_path) os << " " << to_string(q);
        os << "\n";
    }
    return os.str();
}

i64 degree(const NetMapPresentation& p) { return std::abs(p.lambda1.det()); }

bool is_euclidean(const NetMapPresentation& p) {
    // With four distinct inverse pairs inside Lambda1 the classes are exactly Lambda1/2Lambda1.
    for (const auto& h : p.postcritical)
        if (!in_lattice(h, p.lambda1)) return false;
    return true;
}

std::vector<CosetEntry> preimage_coset_table(const NetMapPresentation& p) {
    const Basis2 twoL1{2 * p.lambda1.u, 2 * p.lambda1.v};
    std::vector<CosetEntry> both, p1only, p2only;
    for (int k = 0; k < 4; ++k) {
        const auto& mir = p.mirrors[k];
        bool hit = false;
        for (const auto& h : p.postcritical)
            if (same_class(mir.midpoint, h, twoL1)) hit = true;
        if (!hit) p1only.push_back({mir.midpoint, CosetTag::P1only});
    }
    for (int k = 0; k < 4; ++k) {
        const IntVec2 h = p.postcritical[k];
        if (in_lattice(h, p.lambda1)) {
            both.push_back({h, CosetTag::P1andP2});
            continue;
        }
        p2only.push_back({h, CosetTag::P2only});
        // The inverse class, taken at the other end of the mirror when possible.
        IntVec2 partner = -h;
        const auto& mir = p.mirrors[k];
        if (!mir.degenerate()) {
            IntVec2 t = mir.terminal();
            IntVec2 other = 2 * mir.midpoint - t;
            partner = same_class(t, h, twoL1) ? other : t;
        }
        p2only.push_back({partner, CosetTag::P2only});
    }
    std::vector<CosetEntry> out = both;
    out.insert(out.end(), p1only.begin(), p1only.end());
    out.insert(out.end(), p2only.begin(), p2only.end());
    return out;
}

bool segments_intersect(const QVec2& a, const QVec2& b, const QVec2& c, const QVec2& d) {
    const i64 L = lcm_den({a, b, c, d});
    return detail::segments_touch(scaled(a, L), scaled(b, L), scaled(c, L), scaled(d, L));
}

} // namespace netmap
