#pragma once

// Functional equations for the pullback map on Teichmueller space and their
// shadows on slopes.

#include "netmap/slope_fn.hpp"

#include <string>
#include <vector>

namespace netmap {

// z -> (a z + b) / (c z + d), or with conj(z) in place of z when conjugating.
struct Mobius {
    i64 a = 1, b = 0, c = 0, d = 1;
    bool conjugating = false;

    i64 det() const { return a * d - b * c; }
    Mat2 matrix() const { return {a, b, c, d}; }
    static Mobius identity() { return {}; }
    // Both maps agree as maps of the upper half-plane.
    bool same_map(const Mobius& o) const;
};

// Composition (f . g)(z) = f(g(z)).
Mobius compose(const Mobius& f, const Mobius& g);
Mobius inverse(const Mobius& f);
// f^n for n >= 0.
Mobius power(const Mobius& f, i64 n);

// The induced action on slopes: s -> -1 / f(-1/s).
Slope act_on_slope(const Mobius& f, const Slope& s);

// "z/(5z+1)", "-conj(z)"
std::string formula(const Mobius& f);
std::string formula(const Mobius& f, const std::string& var);
std::string to_string(const Mobius& f);

Mobius twist_matrix(const Slope& s);

struct FunctionalEquation {
    Mobius inner;
    i64 inner_power = 1;
    Mobius outer;
    i64 outer_power = 0;
};

FunctionalEquation twist_equation(const NetMapPresentation& p, const Slope& s);
// "Sigma_f . [[1,0],[-2,1]]^5 = [[1,0],[-2,1]]^2 . Sigma_f"
std::string to_string(const FunctionalEquation& e);
// The same equation composed with inverses and written out,
// e.g. "Sigma_f(z/(10z+1)) = Sigma_f(z)/(4Sigma_f(z)+1)".
std::string substituted(const FunctionalEquation& e);

struct ReflectionPair {
    // Boundary points as extended rationals (p/q means the number p/q).
    std::pair<Slope, Slope> rho2_endpoints;
    std::pair<Slope, Slope> rho1_endpoints;
};

ReflectionPair reflection_equation(const NetMapPresentation& p, const Slope& s1, const Slope& s2);

struct AffineMap {
    Mat2 linear;
    IntVec2 translation;
};

// Parses "a,b;c,d;tx,ty" (translation optional).
AffineMap parse_affine(const std::string& text);

bool aff_membership(const NetMapPresentation& p, const AffineMap& f);
Mobius sigma_delta2(const Mat2& linear);
// Matrix of the linear part in the correspondence basis.
Mat2 lambda1_matrix(const NetMapPresentation& p, const Mat2& linear);
// Throws MirrorsNotStabilized unless f maps the mirror system to itself.
Mobius sigma_delta1(const NetMapPresentation& p, const AffineMap& f);
bool stabilizes_mirrors(const NetMapPresentation& p, const AffineMap& f);

struct ConsistencyReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// sigma(Sigma_delta2 s) = Sigma_delta1 sigma(s) for each element and all slopes
// up to height, and the twist identities sigma(phi^d t) = psi^c sigma(t) for
// twists about slopes of height at most twist_height.
ConsistencyReport consistency_suite(const NetMapPresentation& p, const std::vector<AffineMap>& elements, i64 height,
                                    i64 twist_height = 3);

// The pair (m, b) such that y = m x + b is mapped to itself by every slope
// identity sigma(A s) = B sigma(s) derived from the elements, solved exactly.
std::optional<std::pair<Q, Q>> invariant_line(const NetMapPresentation& p, const std::vector<AffineMap>& elements);

} // namespace netmap
