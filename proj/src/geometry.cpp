#include "geometry.hpp"

#include <algorithm>
#include <optional>

namespace netmap::detail {

namespace {

bool on_closed(const P128& a, const P128& b, const P128& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_touch(const P128& a, const P128& b, const P128& c, const P128& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_closed(a, b, c)) return true;
    if (o2 == 0 && on_closed(a, b, d)) return true;
    if (o3 == 0 && on_closed(c, d, a)) return true;
    if (o4 == 0 && on_closed(c, d, b)) return true;
    return false;
}

std::vector<IntVec2> lattice_points_in_hull(const Basis2& E, i64 L, const std::vector<P128>& pts) {
    i128 D = E.det();
    // Y = adj(E) * X maps the lattice point (i, j) to D*L*(i, j).
    i128 a = E.v.y, b = -E.v.x, c = -E.u.y, d = E.u.x;
    if (D < 0) {
        a = -a, b = -b, c = -c, d = -d;
        D = -D;
    }
    const i128 S = D * L;
    std::vector<P128> Y;
    Y.reserve(pts.size());
    for (const auto& p : pts) Y.push_back({a * p.x + b * p.y, c * p.x + d * p.y});

    i128 xmin = Y[0].x, xmax = Y[0].x;
    for (const auto& y : Y) xmin = std::min(xmin, y.x), xmax = std::max(xmax, y.x);

    std::vector<IntVec2> out;
    for (i128 i = ceil_div128(xmin, S); i <= floor_div128(xmax, S); ++i) {
        const i128 cx = i * S;
        // Slice of the hull at Y.x = cx: extreme ordinates over points and
        // over every pair straddling the line. Ordinates are num/den, den > 0.
        std::optional<std::pair<i128, i128>> lo, hi;
        auto consider = [&](i128 num, i128 den) {
            if (!lo || num * lo->second < lo->first * den) lo = {num, den};
            if (!hi || num * hi->second > hi->first * den) hi = {num, den};
        };
        for (std::size_t k = 0; k < Y.size(); ++k) {
            if (Y[k].x == cx) consider(Y[k].y, 1);
            for (std::size_t l = k + 1; l < Y.size(); ++l) {
                i128 s1 = Y[k].x - cx, s2 = Y[l].x - cx;
                if ((s1 < 0 && s2 > 0) || (s1 > 0 && s2 < 0)) {
                    i128 den = Y[l].x - Y[k].x;
                    i128 num = Y[k].y * den + (Y[l].y - Y[k].y) * (cx - Y[k].x);
                    if (den < 0) num = -num, den = -den;
                    consider(num, den);
                }
            }
        }
        if (!lo) continue;
        i128 jlo = ceil_div128(lo->first, lo->second * S);
        i128 jhi = floor_div128(hi->first, hi->second * S);
        for (i128 j = jlo; j <= jhi; ++j) out.push_back({static_cast<i64>(i), static_cast<i64>(j)});
    }
    return out;
}

} // namespace netmap::detail
