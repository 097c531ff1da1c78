#include "netmap/obstruction.hpp"
#include "netmap/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace netmap {

namespace {

Rational to_rat(const Q& q) { return Rational(q.numerator()) / Rational(q.denominator()); }

bool value_less(const Slope& a, const Slope& b) {
    if (a.is_inf()) return false;
    if (b.is_inf()) return true;
    return static_cast<i128>(a.p) * b.q < static_cast<i128>(b.p) * a.q;
}

// Slope whose boundary point is x, i.e. -1/x.
Slope slope_at(const std::optional<QuadExt>& x) {
    if (!x) return slope_normalize(0, 1);
    const Rational r = x->a;
    if (r == 0) return Slope::inf();
    return slope_normalize(to_i64(-denominator(r)), to_i64(numerator(r)));
}

// Reason a rational boundary point cannot carry an obstruction, or nullopt if it can.
std::optional<std::string> exclude_point(const NetMapPresentation& p, const LeftoverPoint& lp) {
    if (!lp.rational) return std::string("irrational, not a slope");
    const Slope s = slope_at(lp.point);
    const Slope image = sigma(p, s);
    if (image != s) return "sigma(" + to_string(s) + ") = " + to_string(image);
    const Q m = multiplier(p, s);
    if (m < Q(1)) return "fixed slope " + to_string(s) + " with multiplier " + to_string(m) + " < 1";
    return std::nullopt;
}

struct Resolution {
    bool ok = false;
    std::vector<LeftoverDisposition> leftovers;
    std::optional<FixedSlope> obstruction;
};

Resolution resolve(const NetMapPresentation& p, const std::vector<HalfSpace>& spaces) {
    Resolution r;
    if (spaces.empty()) return r;
    const CoverVerdict cv = cover_certificate(spaces);
    if (!cv.gaps.empty()) return r;
    for (const auto& lp : cv.points) {
        auto why = exclude_point(p, lp);
        if (!why) {
            const Slope s = slope_at(lp.point);
            r.obstruction = FixedSlope{s, multiplier(p, s)};
            return r;
        }
        r.leftovers.push_back({lp, *why});
    }
    r.ok = true;
    return r;
}

std::string describe(const Gap& g) {
    return "(" + (g.lo ? to_string(*g.lo) : std::string("-inf")) + ", " + (g.hi ? to_string(*g.hi) : std::string("+inf")) +
           ")";
}

ObstructionVerdict finish(const NetMapPresentation& p, i64 height, std::vector<HalfSpace> considered,
                          std::vector<std::string> diagnostics) {
    ObstructionVerdict v;
    v.height = height;
    v.considered = considered;
    v.diagnostics = std::move(diagnostics);
    Resolution r = resolve(p, considered);
    if (r.obstruction) {
        v.kind = VerdictKind::Obstructed;
        v.slope = r.obstruction->slope;
        v.multiplier = r.obstruction->multiplier;
        return v;
    }
    if (!r.ok) {
        v.kind = VerdictKind::Inconclusive;
        const CoverVerdict cv = cover_certificate(considered);
        for (const auto& g : cv.gaps) v.diagnostics.push_back("uncovered " + describe(g));
        return v;
    }
    // Drop half-spaces from the back while the rest still certifies.
    std::vector<HalfSpace> keep = considered;
    for (std::size_t i = keep.size(); i-- > 0;) {
        std::vector<HalfSpace> trial = keep;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        Resolution t = resolve(p, trial);
        if (t.ok) {
            keep = std::move(trial);
            r = std::move(t);
        }
    }
    v.kind = VerdictKind::Unobstructed;
    v.certificate = std::move(keep);
    v.leftovers = std::move(r.leftovers);
    return v;
}

// Interval-cover greedy along the real line from -inf: each step takes the
// boundary set that contains the current point and reaches farthest right.
// Returns picked indices, or empty when some stretch cannot be covered.
std::vector<std::size_t> greedy_cover(const std::vector<BoundaryArc>& arcs) {
    using S = BoundaryArc::Shape;
    // Right end of the stretch (cur, t) inside a; nullopt reach means +inf.
    struct Reach {
        bool ok = false;
        std::optional<QuadExt> to;
    };
    auto reach = [](const BoundaryArc& a, const std::optional<QuadExt>& cur) {
        Reach r;
        if (!cur) {
            if (a.shape == S::Complement) r = {true, a.lo};
            if (a.shape == S::Below) r = {true, a.hi};
            return r;
        }
        const QuadExt& x = *cur;
        switch (a.shape) {
        case S::Interval:
            if (!(x < a.lo) && x < a.hi) r = {true, a.hi};
            break;
        case S::Complement:
            if (x < a.lo) r = {true, a.lo};
            else if (!(x < a.hi)) r = {true, std::nullopt};
            break;
        case S::Below:
            if (x < a.hi) r = {true, a.hi};
            break;
        case S::Above:
            if (!(x < a.lo)) r = {true, std::nullopt};
            break;
        }
        return r;
    };
    auto farther = [](const std::optional<QuadExt>& a, const std::optional<QuadExt>& b) {
        if (!b) return false;
        if (!a) return true;
        return *b < *a;
    };
    std::vector<std::size_t> picks;
    std::optional<QuadExt> cur;
    bool started = false;
    for (std::size_t step = 0; step <= arcs.size(); ++step) {
        if (started) {
            bool point_ok = false, tail_ok = false;
            for (std::size_t i : picks) {
                point_ok = point_ok || arcs[i].contains(*cur);
                Reach r = reach(arcs[i], cur);
                tail_ok = tail_ok || (r.ok && !r.to);
            }
            if (point_ok && tail_ok) return picks;
        }
        std::optional<std::size_t> best;
        bool best_holds = false;
        std::optional<QuadExt> best_to;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            Reach r = reach(arcs[i], cur);
            if (!r.ok) continue;
            const bool holds = !cur || arcs[i].contains(*cur);
            if (!best || (holds && !best_holds) || (holds == best_holds && farther(r.to, best_to))) {
                best = i;
                best_holds = holds;
                best_to = r.to;
            }
        }
        if (!best) return {};
        picks.push_back(*best);
        if (!best_to) {
            cur = std::nullopt;
            break;
        }
        cur = best_to;
        started = true;
    }
    return picks;
}

std::optional<ObstructionVerdict> fixed_slope_check(const NetMapPresentation& p, i64 height) {
    for (const auto& f : find_fixed_slopes(p, height)) {
        if (f.multiplier >= Q(1)) {
            if (sigma(p, f.slope) != f.slope || multiplier(p, f.slope) != f.multiplier)
                throw InternalError("fixed slope recheck failed");
            ObstructionVerdict v;
            v.kind = VerdictKind::Obstructed;
            v.slope = f.slope;
            v.multiplier = f.multiplier;
            v.height = height;
            return v;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<Slope> enumerate_slopes(i64 height) {
    std::vector<Slope> out;
    for (i64 h = 1; h <= height; ++h) {
        std::vector<Slope> level;
        for (i64 q = 0; q <= h; ++q)
            for (i64 p = -h; p <= h; ++p) {
                if (std::max(std::abs(p), q) != h || std::gcd(p, q) != 1) continue;
                if (q == 0 && p != 1) continue;
                level.push_back(slope_normalize(p, q));
            }
        std::sort(level.begin(), level.end(), value_less);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<FixedSlope> find_fixed_slopes(const NetMapPresentation& p, i64 height) {
    std::vector<FixedSlope> out;
    for (const Slope& s : enumerate_slopes(height))
        if (sigma(p, s) == s) out.push_back({s, multiplier(p, s)});
    return out;
}

ObstructionVerdict obstruction_report(const NetMapPresentation& p, i64 height, std::size_t budget) {
    if (auto v = fixed_slope_check(p, height)) return *v;
    std::vector<std::string> diag;
    std::vector<HalfSpace> all;
    for (const Slope& s : enumerate_slopes(height)) {
        try {
            if (auto h = halfspace_for(p, s)) all.push_back(*h);
        } catch (const NonTransverse& e) {
            diag.push_back("slope " + to_string(s) + " skipped: " + e.what());
        }
    }
    // Keep only half-spaces whose boundary set is not inside an earlier or larger one.
    std::vector<BoundaryArc> arcs;
    for (const auto& h : all) arcs.push_back(boundary_interval(h));
    std::vector<HalfSpace> pool;
    std::vector<BoundaryArc> pool_arcs;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j)
            if (j != i && arc_subset(arcs[i], arcs[j]) && (j < i || !arc_subset(arcs[j], arcs[i]))) dominated = true;
        if (!dominated) {
            pool.push_back(all[i]);
            pool_arcs.push_back(arcs[i]);
        }
    }
    std::vector<std::size_t> picks = greedy_cover(pool_arcs);
    std::vector<HalfSpace> chosen;
    if (picks.empty() || picks.size() > budget) {
        if (picks.empty()) diag.push_back("candidate boundary sets leave a gap");
        else diag.push_back("a cover needs " + std::to_string(picks.size()) + " half-spaces");
        if (picks.empty())
            for (std::size_t i = 0; i < pool.size(); ++i) picks.push_back(i);
        if (picks.size() > budget) picks.resize(budget);
        std::sort(picks.begin(), picks.end());
        for (std::size_t i : picks) chosen.push_back(pool[i]);
    } else {
        std::sort(picks.begin(), picks.end());
        std::vector<bool> used(pool.size(), false);
        for (std::size_t i : picks) used[i] = true;
        for (std::size_t i : picks) chosen.push_back(pool[i]);
        // Fill the budget with further maximal half-spaces in height order.
        for (std::size_t i = 0; i < pool.size() && chosen.size() < budget; ++i)
            if (!used[i]) chosen.push_back(pool[i]);
    }
    return finish(p, height, std::move(chosen), std::move(diag));
}

ObstructionVerdict obstruction_report(const NetMapPresentation& p, i64 height, const std::vector<Slope>& slopes) {
    if (auto v = fixed_slope_check(p, height)) return *v;
    std::vector<std::string> diag;
    std::vector<HalfSpace> spaces;
    for (const Slope& s : slopes) {
        if (auto h = halfspace_for(p, s))
            spaces.push_back(*h);
        else
            diag.push_back("slope " + to_string(s) + " gives no half-space");
    }
    return finish(p, height, std::move(spaces), std::move(diag));
}

std::vector<std::string> verify_certificate(const NetMapPresentation& p, const ObstructionVerdict& v) {
    std::vector<std::string> bad;
    if (v.kind == VerdictKind::Obstructed) {
        if (sigma(p, v.slope) != v.slope) bad.push_back("obstruction slope is not fixed");
        if (multiplier(p, v.slope) != v.multiplier || v.multiplier < Q(1)) bad.push_back("obstruction multiplier wrong");
        return bad;
    }
    if (v.kind != VerdictKind::Unobstructed) return {"no certificate"};
    if (v.certificate.empty()) return {"empty certificate"};

    // Rebuild every boundary set from the source slope alone.
    struct Arc {
        int shape;  // 0 interval, 1 complement, 2 below, 3 above
        QuadExt lo, hi;
    };
    std::vector<Arc> arcs;
    for (const auto& h : v.certificate) {
        const Slope s = h.slope, t = sigma(p, s);
        if (t != h.image) bad.push_back("image of " + to_string(s) + " differs");
        if (!t.essential || t == s) {
            bad.push_back("slope " + to_string(s) + " gives no half-space");
            continue;
        }
        const Rational delta = to_rat(multiplier(p, s));
        if (delta != h.delta) bad.push_back("multiplier of " + to_string(s) + " differs");
        const Rational P = s.p, Qv = s.q, P2 = t.p, Q2 = t.q;
        const Rational den = P * P - delta * P2 * P2;
        if (den == 0) {
            const Rational m = -(Qv / P + Q2 / P2) / 2;
            if (m != h.center) bad.push_back("vertical line of " + to_string(s) + " differs");
            const bool left = -Qv / P < m;
            arcs.push_back({left ? 2 : 3, QuadExt::rational(m), QuadExt::rational(m)});
            continue;
        }
        const Rational C = (-P * Qv + delta * P2 * Q2) / den;
        const Rational cross = P * Q2 - P2 * Qv;
        const Rational R2 = cross * cross * delta / (den * den);
        if (C != h.center || R2 != h.radius_squared()) bad.push_back("circle of " + to_string(s) + " differs");
        const QuadExt R = QuadExt::sqrt_of(R2);
        const QuadExt c = QuadExt::rational(C);
        arcs.push_back({den > 0 ? 0 : 1, c - R, c + R});
    }
    auto inside = [](const Arc& a, const QuadExt& x) {
        switch (a.shape) {
        case 0: return compare(a.lo, x) < 0 && compare(x, a.hi) < 0;
        case 1: return compare(x, a.lo) < 0 || compare(a.hi, x) < 0;
        case 2: return compare(x, a.hi) < 0;
        default: return compare(a.lo, x) < 0;
        }
    };
    // Points just to the right of x.
    auto right_of = [](const Arc& a, const QuadExt& x) {
        switch (a.shape) {
        case 0: return compare(a.lo, x) <= 0 && compare(x, a.hi) < 0;
        case 1: return compare(x, a.lo) < 0 || compare(a.hi, x) <= 0;
        case 2: return compare(x, a.hi) < 0;
        default: return compare(a.lo, x) <= 0;
        }
    };
    auto listed = [&](const std::optional<QuadExt>& x) {
        for (const auto& l : v.leftovers) {
            if (!x && !l.point.point) return true;
            if (x && l.point.point && compare(*x, *l.point.point) == 0) return true;
        }
        return false;
    };
    bool below_ok = false, inf_ok = false;
    for (const auto& a : arcs) {
        below_ok = below_ok || a.shape == 1 || a.shape == 2;
        inf_ok = inf_ok || a.shape == 1;
    }
    if (!below_ok) bad.push_back("no boundary set reaches -inf");
    if (!inf_ok && !listed(std::nullopt)) bad.push_back("inf uncovered");
    for (const auto& a : arcs) {
        for (const QuadExt& e : {a.lo, a.hi}) {
            bool in = false, right = false;
            for (const auto& b : arcs) {
                in = in || inside(b, e);
                right = right || right_of(b, e);
            }
            if (!in && !listed(e)) bad.push_back("endpoint " + to_string(e) + " uncovered");
            if (!right) bad.push_back("points right of " + to_string(e) + " uncovered");
        }
    }
    for (const auto& l : v.leftovers)
        if (!exclude_point(p, l.point)) bad.push_back("leftover point carries a possible obstruction");
    return bad;
}

std::string summary_line(const ObstructionVerdict& v) {
    switch (v.kind) {
    case VerdictKind::Obstructed:
        return "OBSTRUCTED slope=" + to_string(v.slope) + " delta=" + to_string(v.multiplier);
    case VerdictKind::Unobstructed: return "UNOBSTRUCTED (" + std::to_string(v.certificate.size()) + " half-spaces)";
    case VerdictKind::Inconclusive:
        return "INCONCLUSIVE (height " + std::to_string(v.height) + ", " + std::to_string(v.considered.size()) +
               " half-spaces)";
    }
    return "?";
}

std::string render_svg(const ObstructionVerdict& v) {
    const double width = 800, height = 420, margin = 20, base = height - 40;
    double lo = -1, hi = 1;
    for (const auto& h : v.considered) {
        const double c = static_cast<double>(h.center);
        const double r = (h.kind == HalfSpaceKind::InsideCircle || h.kind == HalfSpaceKind::OutsideCircle)
                             ? h.radius.approx()
                             : 0.0;
        lo = std::min(lo, c - r);
        hi = std::max(hi, c + r);
    }
    const double scale = (width - 2 * margin) / (hi - lo);
    auto X = [&](double x) { return margin + (x - lo) * scale; };
    auto num = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", x);
        return std::string(buf);
    };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << base
       << "\" fill=\"#eeeeee\"/>\n";
    os << "<path d=\"M 0 " << base << " H " << width << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const auto& h : v.considered) {
        const double c = X(static_cast<double>(h.center));
        const std::string label = to_string(h.slope) + " -> " + to_string(h.image);
        if (h.kind == HalfSpaceKind::InsideCircle || h.kind == HalfSpaceKind::OutsideCircle) {
            const double r = h.radius.approx() * scale;
            const bool in = h.kind == HalfSpaceKind::InsideCircle;
            os << "<circle cx=\"" << num(c) << "\" cy=\"" << base << "\" r=\"" << num(r) << "\" fill=\""
               << (in ? "white" : "none") << "\" fill-opacity=\"0.6\" stroke=\"" << (in ? "navy" : "darkred")
               << "\"><title>" << label << "</title></circle>\n";
        } else {
            os << "<line x1=\"" << num(c) << "\" y1=\"0\" x2=\"" << num(c) << "\" y2=\"" << base
               << "\" stroke=\"darkgreen\"><title>" << label << "</title></line>\n";
        }
    }
    os << "<text x=\"" << margin << "\" y=\"" << height - 10 << "\" font-size=\"14\">" << summary_line(v)
       << "</text>\n</svg>\n";
    return os.str();
}

} // namespace netmap
