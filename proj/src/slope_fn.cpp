#include "netmap/slope_fn.hpp"
#include "netmap/errors.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace netmap {

namespace {

using detail::P128;

enum : unsigned { kP1 = 1, kP2 = 2 };

struct Endpoint {
    IntVec2 rep;
    IntVec2 midpoint;
};

// Per-presentation lookup tables over Lambda2 / 2 Lambda1.
struct MirrorSystem {
    FiniteAbelianPres quot;
    std::vector<unsigned> kind;
    std::vector<std::optional<Endpoint>> endpoint;

    explicit MirrorSystem(const NetMapPresentation& p) : quot(quotient_presentation(p.lambda1, 2)) {
        kind.assign(quot.order(), 0);
        endpoint.assign(quot.order(), std::nullopt);
        const IntVec2 u = p.lambda1.u, v = p.lambda1.v;
        for (const IntVec2& g : {IntVec2{0, 0}, u, v, u + v}) kind[idx(g)] |= kP1;
        for (const IntVec2& h : p.postcritical) {
            kind[idx(h)] |= kP2;
            kind[idx(-h)] |= kP2;
        }
        auto put = [&](const IntVec2& rep, const IntVec2& mid) {
            auto& slot = endpoint[idx(rep)];
            if (!slot) slot = Endpoint{rep, mid};
        };
        for (const auto& m : p.mirrors) {
            if (m.degenerate()) {
                put(m.midpoint, m.midpoint);
            } else {
                const IntVec2 t = m.terminal();
                put(t, m.midpoint);
                put(2 * m.midpoint - t, m.midpoint);
            }
        }
    }

    i64 idx(const IntVec2& g) const { return quot.index(reduce_mod(g, quot)); }
    unsigned kind_of(const IntVec2& g) const { return kind[idx(g)]; }

    IntVec2 midpoint_at(const IntVec2& g) const {
        const auto& e = endpoint[idx(g)];
        if (!e) throw InternalError("point " + to_string(g) + " is not an end of a spin mirror");
        return e->midpoint + (g - e->rep);
    }
};

struct Frac {
    i128 num;
    i128 den;  // > 0
};

Frac make_frac(i128 num, i128 den) {
    if (den < 0) num = -num, den = -den;
    return {num, den};
}

bool frac_less(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
bool strictly_inside_unit(const Frac& f) { return f.num > 0 && f.num < f.den; }

i64 lcm_of(const std::vector<QVec2>& pts) {
    i64 L = 1;
    for (const auto& q : pts) L = std::lcm(L, std::lcm(q.x.denominator(), q.y.denominator()));
    return L;
}

P128 scale_pt(const QVec2& q, i64 L) {
    return {static_cast<i128>(q.x.numerator()) * (L / q.x.denominator()),
            static_cast<i128>(q.y.numerator()) * (L / q.y.denominator())};
}

// Offsets t with polyline + L*t possibly meeting segment [A, B].
std::vector<IntVec2> candidate_translates(const Basis2& E, i64 L, const P128& A, const P128& B,
                                          const std::vector<P128>& poly) {
    i128 x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
    for (const auto& q : poly) {
        x0 = std::min(x0, q.x), x1 = std::max(x1, q.x);
        y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
    }
    std::vector<P128> pts;
    for (const P128& c : {P128{x0, y0}, P128{x0, y1}, P128{x1, y0}, P128{x1, y1}}) {
        pts.push_back(A - c);
        pts.push_back(B - c);
    }
    std::vector<IntVec2> out;
    for (const auto& ij : detail::lattice_points_in_hull(E, L, pts)) out.push_back(ij.x * E.u + ij.y * E.v);
    return out;
}

} // namespace

IntVec2 mirror_midpoint_at(const NetMapPresentation& p, const IntVec2& v) { return MirrorSystem(p).midpoint_at(v); }

std::vector<IntVec2> crossing_midpoints(const NetMapPresentation& p, const QVec2& a, const QVec2& b) {
    std::vector<std::vector<QVec2>> full;
    std::vector<QVec2> all{a, b};
    for (const auto& m : p.mirrors) {
        full.push_back(m.full());
        all.insert(all.end(), full.back().begin(), full.back().end());
    }
    const i64 L = lcm_of(all);
    const P128 A = scale_pt(a, L), B = scale_pt(b, L), dir = B - A;
    const i128 len2 = detail::dot(dir, dir);
    const Basis2 E{2 * p.lambda1.u, 2 * p.lambda1.v};

    std::vector<std::pair<Frac, IntVec2>> hits;
    for (int k = 0; k < 4; ++k) {
        const auto& mir = p.mirrors[k];
        std::vector<P128> poly;
        for (const auto& q : full[k]) poly.push_back(scale_pt(q, L));
        const std::size_t mid = poly.size() / 2;
        for (const IntVec2& t : candidate_translates(E, L, A, B, poly)) {
            const P128 shift{static_cast<i128>(t.x) * L, static_cast<i128>(t.y) * L};
            std::vector<P128> P;
            for (const auto& q : poly) P.push_back(q + shift);
            const IntVec2 midpoint = mir.midpoint + t;
            if (mir.degenerate()) {
                if (detail::orient(A, B, P[0]) == 0 && strictly_inside_unit({detail::dot(P[0] - A, dir), len2}))
                    throw DegenerateIncidence("segment passes through the fixed point " + to_string(midpoint));
                continue;
            }
            std::vector<int> o(P.size());
            for (std::size_t i = 0; i < P.size(); ++i) o[i] = detail::orient(A, B, P[i]);
            for (std::size_t i = 0; i < P.size(); ++i) {
                if (o[i] != 0) continue;
                Frac s{detail::dot(P[i] - A, dir), len2};
                if (!strictly_inside_unit(s)) continue;
                if (i == 0 || i + 1 == P.size() || i == mid)
                    throw NonTransverse("segment meets an end or the midpoint of the mirror at " + to_string(midpoint));
                if (o[i - 1] * o[i + 1] < 0)
                    hits.push_back({s, midpoint});
                else
                    throw NonTransverse("segment touches the mirror at " + to_string(midpoint) + " without crossing");
            }
            for (std::size_t i = 0; i + 1 < P.size(); ++i) {
                if (o[i] * o[i + 1] < 0) {
                    const P128 e = P[i + 1] - P[i];
                    Frac s = make_frac(detail::cross(P[i] - A, e), detail::cross(dir, e));
                    if (strictly_inside_unit(s)) hits.push_back({s, midpoint});
                } else if (o[i] == 0 && o[i + 1] == 0) {
                    const i128 s0 = detail::dot(P[i] - A, dir), s1 = detail::dot(P[i + 1] - A, dir);
                    if (std::max(s0, s1) > 0 && std::min(s0, s1) < len2)
                        throw NonTransverse("segment runs along the mirror at " + to_string(midpoint));
                }
            }
        }
    }
    std::stable_sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return frac_less(x.first, y.first); });
    std::vector<IntVec2> out;
    for (const auto& h : hits) out.push_back(h.second);
    return out;
}

std::vector<IntVec2> mirror_crossings(const NetMapPresentation& p, const IntVec2& v, const IntVec2& w) {
    const MirrorSystem sys(p);
    std::vector<IntVec2> out{sys.midpoint_at(v)};
    for (const auto& m : crossing_midpoints(p, QVec2::of(v), QVec2::of(w))) out.push_back(m);
    out.push_back(sys.midpoint_at(w));
    return out;
}

std::vector<std::pair<IntVec2, IntVec2>> segment_candidates(const NetMapPresentation& p, const Slope& slope) {
    const PullbackSummary sum = analyze_slope(p, slope);
    if (sum.essential == 0) throw NonEssential();
    const MirrorSystem sys(p);
    const IntVec2 lam = slope.vec();
    std::vector<IntVec2> starts;
    const auto table = preimage_coset_table(p);
    for (const auto& e : table) {
        if (e.tag == CosetTag::P1only) continue;
        const i64 c = coset_number(e.rep, slope, sum.d_prime);
        if (c == sum.coset_numbers[1] || c == sum.coset_numbers[2]) starts.push_back(e.rep);
    }

    std::vector<std::pair<IntVec2, IntVec2>> out;
    for (const IntVec2& v : starts) {
        std::vector<std::pair<IntVec2, unsigned>> hits{{v, sys.kind_of(v)}};
        for (i64 t = 1; t <= 4 * sum.d; ++t) {
            IntVec2 q = v + t * lam;
            if (unsigned k = sys.kind_of(q)) hits.push_back({q, k});
        }
        for (std::size_t i = 0; i + 1 < hits.size(); ++i)
            if ((hits[i].second & kP2) && (hits[i + 1].second & kP2)) out.push_back({hits[i].first, hits[i + 1].first});
    }
    return out;
}

std::pair<IntVec2, IntVec2> find_segment(const NetMapPresentation& p, const Slope& slope) {
    auto c = segment_candidates(p, slope);
    if (c.empty()) throw InternalError("no segment between postcritical lifts for slope " + to_string(slope));
    return c.front();
}

ZigzagTrace sigma_trace(const NetMapPresentation& p, const Slope& slope) {
    ZigzagTrace tr;
    tr.slope = slope;
    std::optional<NonTransverse> nontransverse;
    std::optional<DegenerateIncidence> degenerate;
    bool zero_delta = false;
    const i64 D = p.correspondence.det();
    for (const auto& [v, w] : segment_candidates(p, slope)) {
        std::vector<IntVec2> mids;
        try {
            mids = mirror_crossings(p, v, w);
        } catch (const NonTransverse& e) {
            if (!nontransverse) nontransverse = e;
            continue;
        } catch (const DegenerateIncidence& e) {
            if (!degenerate) degenerate = e;
            continue;
        }
        IntVec2 delta{0, 0};
        for (std::size_t i = 0; i + 1 < mids.size(); ++i) {
            IntVec2 step = mids[i + 1] - mids[i];
            delta = (i % 2 == 0) ? delta + step : delta - step;
        }
        if (delta == IntVec2{0, 0}) {
            zero_delta = true;
            continue;
        }
        const IntVec2 ab = coords_scaled(delta, p.correspondence);
        if (ab.x % D != 0 || ab.y % D != 0) throw InternalError("alternating sum " + to_string(delta) + " is not in Lambda1");
        tr.v = v;
        tr.w = w;
        tr.midpoints = mids;
        tr.delta = delta;
        tr.result = slope_normalize(ab.y / D, ab.x / D);
        return tr;
    }
    if (nontransverse) throw *nontransverse;
    if (degenerate) throw *degenerate;
    if (zero_delta) throw InternalError("alternating sum of midpoints vanishes for slope " + to_string(slope));
    throw InternalError("no segment between postcritical lifts for slope " + to_string(slope));
}

Slope sigma(const NetMapPresentation& p, const Slope& slope) {
    if (!slope.essential) return Slope::o();
    if (analyze_slope(p, slope).essential == 0) return Slope::o();
    return sigma_trace(p, slope).result;
}

Slope sigma_main_closed_form(const Slope& slope) {
    if (!slope.essential) return Slope::o();
    if (slope.is_inf()) return Slope::inf();
    const i64 p = slope.p, q = slope.q;
    const i64 q4 = mod_pos(q, 4), r5 = mod_pos(2 * p + q, 5);
    const bool near = (r5 == 1 || r5 == 4);
    IntVec2 v{0, 0};
    i64 k = 0;
    if (q4 == 0) {
        k = (r5 == 0) ? 1 : 5;
    } else if (q4 == 2) {
        if (r5 == 0) v = {2, 0}, k = 2;
        else k = near ? 3 : 1;
    } else {
        if (r5 == 0) v = {2, 0}, k = 4;
        else k = near ? 2 : 6;
    }
    const IntVec2 w = v + k * slope.vec();
    // Mirrors sit on x = 2 mod 4, centred where x + 2y = 10Q, and reach one unit up and down.
    auto level = [](i64 value) { return ceil_div(value - 5, 10); };
    std::vector<i64> xs{v.x}, Qs{level(v.x + 2 * v.y)};
    const i64 shift = (v == IntVec2{2, 0}) ? 4 * p : 0;
    for (i64 x = v.x + 1; x < w.x; ++x) {
        if (mod_pos(x, 4) != 2) continue;
        const i64 num = (q + 2 * p) * x - shift;  // q * (x + 2y) along the segment
        const i64 Qx = ceil_div(num - 5 * q, 10 * q);
        const i64 R = num - 10 * q * Qx;
        if (std::abs(R) == 2 * q) throw NonTransverse("closed form: segment meets a mirror end");
        if (std::abs(R) < 2 * q) {
            xs.push_back(x);
            Qs.push_back(Qx);
        }
    }
    xs.push_back(w.x);
    Qs.push_back(level(w.x + 2 * w.y));
    i64 N = 0, D2 = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const i64 sgn = (i % 2 == 0) ? 1 : -1;
        N += sgn * (Qs[i + 1] - Qs[i]);
        D2 += sgn * (xs[i + 1] - xs[i]);
    }
    return slope_normalize(2 * N, D2);
}

Orbit orbit(const NetMapPresentation& p, const Slope& start, std::size_t max_iter) {
    Orbit o;
    o.trajectory.push_back(start);
    std::unordered_map<Slope, std::size_t, SlopeHash> seen{{start, 0}};
    for (std::size_t it = 0; it < max_iter; ++it) {
        const Slope cur = o.trajectory.back();
        if (!cur.essential) break;
        const Slope next = sigma(p, cur);
        o.trajectory.push_back(next);
        if (!next.essential) break;
        auto f = seen.find(next);
        if (f != seen.end()) {
            o.cycle = std::make_pair(f->second, o.trajectory.size() - 1 - f->second);
            break;
        }
        seen.emplace(next, o.trajectory.size() - 1);
    }
    return o;
}

} // namespace netmap
