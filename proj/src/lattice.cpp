#include "netmap/lattice.hpp"
#include "netmap/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace netmap {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string to_string(const Q& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

Q parse_q(const std::string& text) {
    std::size_t pos = 0;
    auto slash = text.find('/');
    i64 num = std::stoll(text.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? text.size() : slash))
        throw std::invalid_argument("bad rational '" + text + "'");
    i64 den = 1;
    if (slash != std::string::npos) {
        std::string ds = text.substr(slash + 1);
        den = std::stoll(ds, &pos);
        if (pos != ds.size() || den == 0) throw std::invalid_argument("bad rational '" + text + "'");
    }
    return Q(num, den);
}

const char* to_string(HypothesisReason r) {
    switch (r) {
    case HypothesisReason::NotBasisLambda2: return "NotBasisLambda2";
    case HypothesisReason::NotBasisLambda1: return "NotBasisLambda1";
    case HypothesisReason::ClassSetNotInvariant: return "ClassSetNotInvariant";
    case HypothesisReason::SigmaCollision: return "SigmaCollision";
    }
    return "?";
}

std::string to_string(const IntVec2& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::ostream& operator<<(std::ostream& os, const IntVec2& v) { return os << to_string(v); }

std::string to_string(const Mat2& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
           std::to_string(m.d) + "]]";
}

Slope slope_normalize(i64 p, i64 q) {
    if (p == 0 && q == 0) throw ZeroVector();
    if (q == 0) return Slope::inf();
    i64 g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Slope{true, p, q};
}

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "1/0") return Slope::inf();
    if (text == "o") return Slope::o();
    auto slash = text.find('/');
    try {
        std::size_t pos = 0;
        std::string ps = text.substr(0, slash);
        i64 p = std::stoll(ps, &pos);
        if (pos != ps.size()) throw std::invalid_argument("");
        i64 q = 1;
        if (slash != std::string::npos) {
            std::string qs = text.substr(slash + 1);
            q = std::stoll(qs, &pos);
            if (pos != qs.size()) throw std::invalid_argument("");
        }
        return slope_normalize(p, q);
    } catch (const ZeroVector&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse slope '" + text + "'");
    }
}

std::string to_string(const Slope& s) {
    if (!s.essential) return "o";
    if (s.q == 0) return "inf";
    if (s.q == 1) return std::to_string(s.p);
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << to_string(s); }

i64 height(const Slope& s) { return std::max(std::abs(s.p), std::abs(s.q)); }

double slope_value(const Slope& s) {
    if (!s.essential) return std::numeric_limits<double>::quiet_NaN();
    if (s.q == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(s.p) / static_cast<double>(s.q);
}

IntVec2 coords_scaled(const IntVec2& v, const Basis2& B) {
    // adj([u v]) * v
    return {B.v.y * v.x - B.v.x * v.y, -B.u.y * v.x + B.u.x * v.y};
}

bool in_lattice(const IntVec2& v, const Basis2& B) {
    i64 D = B.det();
    IntVec2 c = coords_scaled(v, B);
    return c.x % D == 0 && c.y % D == 0;
}

i64 order_in_quotient(const IntVec2& v, const Basis2& B) {
    i64 D = std::abs(B.det());
    IntVec2 c = coords_scaled(v, B);
    return D / std::gcd(D, std::gcd(std::abs(c.x), std::abs(c.y)));
}

namespace {

void swap_rows(Mat2& M) { M = Mat2{M.c, M.d, M.a, M.b}; }
void swap_cols(Mat2& M) { M = Mat2{M.b, M.a, M.d, M.c}; }

} // namespace

Smith smith_normal_form(const Mat2& M0) {
    if (M0.det() == 0) throw std::invalid_argument("singular matrix");
    Mat2 M = M0, U, V;
    for (;;) {
        // Move the smallest nonzero entry to (0,0).
        i64 best = 0;
        int where = -1;
        const i64 e[4] = {M.a, M.b, M.c, M.d};
        for (int k = 0; k < 4; ++k)
            if (e[k] != 0 && (where < 0 || std::abs(e[k]) < best)) {
                best = std::abs(e[k]);
                where = k;
            }
        if (where == 1 || where == 3) {
            swap_cols(M);
            swap_cols(V);
        }
        if (where == 2 || where == 3) {
            swap_rows(M);
            swap_rows(U);
        }
        bool dirty = false;
        if (M.c != 0) {
            i64 t = M.c / M.a;
            Mat2 E{1, 0, -t, 1};
            M = E * M;
            U = E * U;
            dirty = dirty || M.c != 0;
        }
        if (M.b != 0) {
            i64 t = M.b / M.a;
            Mat2 E{1, -t, 0, 1};
            M = M * E;
            V = V * E;
            dirty = dirty || M.b != 0;
        }
        if (dirty) continue;
        if (M.d % M.a != 0) {
            // Fold the second row into the first so the gcd surfaces at (0,0).
            Mat2 E{1, 1, 0, 1};
            M = E * M;
            U = E * U;
            continue;
        }
        break;
    }
    if (M.a < 0) {
        Mat2 E{-1, 0, 0, 1};
        M = E * M;
        U = E * U;
    }
    if (M.d < 0) {
        Mat2 E{1, 0, 0, -1};
        M = E * M;
        U = E * U;
    }
    return Smith{U, V, M.a, M.d};
}

FiniteAbelianPres quotient_presentation(const Basis2& L, i64 scale) {
    Mat2 M = Mat2::columns(scale * L.u, scale * L.v);
    Smith s = smith_normal_form(M);
    FiniteAbelianPres pres;
    pres.m = s.m;
    pres.n = s.n;
    pres.to_coords = s.U;
    // U is unimodular, so its inverse is +-adj(U).
    Mat2 inv = s.U.adj();
    if (s.U.det() == -1) inv = Mat2{-inv.a, -inv.b, -inv.c, -inv.d};
    pres.from_coords = inv;
    return pres;
}

IntVec2 reduce_mod(const IntVec2& v, const FiniteAbelianPres& pres) {
    IntVec2 w = pres.to_coords * v;
    return {mod_pos(w.x, pres.m), mod_pos(w.y, pres.n)};
}

IntVec2 lift(const IntVec2& g, const FiniteAbelianPres& pres) { return pres.from_coords * g; }

} // namespace netmap
