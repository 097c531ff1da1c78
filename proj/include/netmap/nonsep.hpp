#pragma once

// Nonseparating subsets of Z/m + Z/n and the constant pullback map test.

#include "netmap/presentation.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace netmap {

struct FinAbGroup {
    i64 m = 1;
    i64 n = 1;

    FinAbGroup(i64 m, i64 n);
    i64 order() const { return m * n; }
    IntVec2 reduce(const IntVec2& g) const { return {mod_pos(g.x, m), mod_pos(g.y, n)}; }
    IntVec2 add(const IntVec2& a, const IntVec2& b) const { return reduce(a + b); }
    IntVec2 neg(const IntVec2& a) const { return reduce(-a); }
    IntVec2 mul(i64 k, const IntVec2& a) const { return reduce(k * a); }
    i64 index(const IntVec2& g) const { return g.x * n + g.y; }
    IntVec2 element(i64 i) const { return {i / n, i % n}; }
    i64 order_of(const IntVec2& g) const;
};

// Four representatives; H is the union of the classes {h, -h}.
struct SymmetricFour {
    std::array<IntVec2, 4> reps;
};

// Throws std::invalid_argument unless the four inverse pairs are disjoint.
SymmetricFour make_symmetric_four(const FinAbGroup& A, const std::array<IntVec2, 4>& reps);
// Sorted elements of H.
std::vector<IntVec2> elements(const FinAbGroup& A, const SymmetricFour& H);
// "{(0,0),(1,0),(3,0),(2,0),(1,1),(3,1)}" with elements in index order.
std::string to_string(const FinAbGroup& A, const SymmetricFour& H);

struct CyclicPair {
    std::vector<bool> in_b;  // membership by index
    IntVec2 generator_b;
    i64 order_b = 1;
    IntVec2 a;  // its image generates A/B
    i64 n_q = 1;
};

// Cyclic B with A/B cyclic, paired with one representative of each coset of B
// that generates A/B. Representatives are the smallest index in their coset.
std::vector<CyclicPair> cyclic_pairs(const FinAbGroup& A);

std::array<i64, 4> coset_numbers_group(const FinAbGroup& A, const SymmetricFour& H, const CyclicPair& c);

struct NonsepResult {
    bool nonseparating = true;
    std::optional<CyclicPair> witness;
    std::array<i64, 4> witness_numbers{};
};

NonsepResult check_nonseparating(const FinAbGroup& A, const SymmetricFour& H);
bool is_nonseparating(const FinAbGroup& A, const SymmetricFour& H);

struct SearchOptions {
    std::size_t budget = 2000000;  // number of candidate subsets
    bool stop_at_first = false;
};

std::vector<SymmetricFour> search_nonseparating(const FinAbGroup& A, const SearchOptions& opt = {});
SymmetricFour translate_by_involution(const FinAbGroup& A, const SymmetricFour& H, const IntVec2& h);
bool verify_nonexistence(const FinAbGroup& A, std::size_t budget = 2000000);

struct Degree2Entry {
    SymmetricFour H;
    bool has_order4_classes = false;
    bool one_of_2A = false;
    bool realizable() const { return has_order4_classes && one_of_2A; }
};

struct Degree2Report {
    std::vector<Degree2Entry> entries;
    std::size_t realizable = 0;
};

// All nonseparating H in Z/4 + Z/2 with the two necessary conditions for
// coming from a degree 2 map.
Degree2Report degree2_refutation();

// A = Lambda2 / 2 Lambda1 and the images of the postcritical representatives.
std::pair<FinAbGroup, SymmetricFour> postcritical_group(const NetMapPresentation& p);
bool constant_teich_check(const NetMapPresentation& p);

} // namespace netmap
