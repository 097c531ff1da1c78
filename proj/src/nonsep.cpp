#include "netmap/nonsep.hpp"
#include "netmap/errors.hpp"

#include <algorithm>
#include <set>

namespace netmap {

FinAbGroup::FinAbGroup(i64 m_, i64 n_) : m(m_), n(n_) {
    if (m < 1 || n < 1 || (n % m != 0 && m % n != 0))
        throw std::invalid_argument("need Z/m + Z/n with one of m, n dividing the other");
}

i64 FinAbGroup::order_of(const IntVec2& g) const {
    const IntVec2 r = reduce(g);
    return std::lcm(m / std::gcd(m, r.x), n / std::gcd(n, r.y));
}

SymmetricFour make_symmetric_four(const FinAbGroup& A, const std::array<IntVec2, 4>& reps) {
    SymmetricFour H;
    std::set<i64> seen;
    for (int k = 0; k < 4; ++k) {
        H.reps[k] = A.reduce(reps[k]);
        const i64 a = A.index(H.reps[k]), b = A.index(A.neg(H.reps[k]));
        if (seen.count(a) || seen.count(b)) throw std::invalid_argument("inverse pairs are not disjoint");
        seen.insert(a);
        seen.insert(b);
    }
    return H;
}

std::vector<IntVec2> elements(const FinAbGroup& A, const SymmetricFour& H) {
    std::set<i64> idx;
    for (const auto& h : H.reps) {
        idx.insert(A.index(A.reduce(h)));
        idx.insert(A.index(A.neg(h)));
    }
    std::vector<IntVec2> out;
    for (i64 i : idx) out.push_back(A.element(i));
    return out;
}

std::string to_string(const FinAbGroup& A, const SymmetricFour& H) {
    std::string s = "{";
    for (const auto& g : elements(A, H)) s += (s.size() > 1 ? "," : "") + to_string(g);
    return s + "}";
}

std::vector<CyclicPair> cyclic_pairs(const FinAbGroup& A) {
    const i64 N = A.order();
    std::vector<CyclicPair> out;
    std::set<std::vector<bool>> seen;
    for (i64 gi = 0; gi < N; ++gi) {
        const IntVec2 g = A.element(gi);
        std::vector<bool> in_b(N, false);
        std::vector<i64> members;
        IntVec2 x{0, 0};
        do {
            in_b[A.index(x)] = true;
            members.push_back(A.index(x));
            x = A.add(x, g);
        } while (x != IntVec2{0, 0});
        if (!seen.insert(in_b).second) continue;
        const i64 order_b = static_cast<i64>(members.size()), nq = N / order_b;
        for (i64 ai = 0; ai < N; ++ai) {
            const IntVec2 a = A.element(ai);
            bool least = true;
            for (i64 b : members)
                if (A.index(A.add(a, A.element(b))) < ai) least = false;
            if (!least) continue;
            i64 k = 1;
            for (IntVec2 y = a; !in_b[A.index(y)]; y = A.add(y, a)) ++k;
            if (k == nq) out.push_back({in_b, g, order_b, a, nq});
        }
    }
    return out;
}

namespace {

// Discrete logarithm of every element in the cyclic quotient A/B.
std::vector<i64> quotient_log(const FinAbGroup& A, const CyclicPair& c) {
    std::vector<i64> members;
    for (i64 i = 0; i < A.order(); ++i)
        if (c.in_b[i]) members.push_back(i);
    std::vector<i64> log(A.order(), -1);
    IntVec2 x{0, 0};
    for (i64 j = 0; j < c.n_q; ++j) {
        for (i64 b : members) log[A.index(A.add(x, A.element(b)))] = j;
        x = A.add(x, c.a);
    }
    return log;
}

std::array<i64, 4> numbers_from(const FinAbGroup& A, const std::vector<i64>& log, i64 nq,
                                const std::array<IntVec2, 4>& reps) {
    std::array<i64, 4> c{};
    for (int k = 0; k < 4; ++k) {
        const i64 j = log[A.index(A.reduce(reps[k]))];
        c[k] = std::min(j, nq - j);
    }
    std::sort(c.begin(), c.end());
    return c;
}

} // namespace

std::array<i64, 4> coset_numbers_group(const FinAbGroup& A, const SymmetricFour& H, const CyclicPair& c) {
    return numbers_from(A, quotient_log(A, c), c.n_q, H.reps);
}

NonsepResult check_nonseparating(const FinAbGroup& A, const SymmetricFour& H) {
    NonsepResult r;
    for (const auto& c : cyclic_pairs(A)) {
        auto nums = coset_numbers_group(A, H, c);
        if (nums[1] != nums[2]) {
            r.nonseparating = false;
            r.witness = c;
            r.witness_numbers = nums;
            return r;
        }
    }
    return r;
}

bool is_nonseparating(const FinAbGroup& A, const SymmetricFour& H) { return check_nonseparating(A, H).nonseparating; }

std::vector<SymmetricFour> search_nonseparating(const FinAbGroup& A, const SearchOptions& opt) {
    std::vector<IntVec2> classes;
    for (i64 i = 0; i < A.order(); ++i)
        if (i <= A.index(A.neg(A.element(i)))) classes.push_back(A.element(i));
    const std::size_t k = classes.size();
    const double subsets = k < 4 ? 0.0 : double(k) * double(k - 1) * double(k - 2) * double(k - 3) / 24.0;
    if (subsets > double(opt.budget))
        throw BudgetExceeded("search over " + std::to_string(static_cast<long long>(subsets)) +
                             " subsets exceeds the budget of " + std::to_string(opt.budget));

    struct Table {
        std::vector<i64> log;
        i64 nq;
    };
    std::vector<Table> tables;
    for (const auto& c : cyclic_pairs(A)) tables.push_back({quotient_log(A, c), c.n_q});

    std::vector<SymmetricFour> out;
    std::array<IntVec2, 4> reps;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = b + 1; c < k; ++c)
                for (std::size_t d = c + 1; d < k; ++d) {
                    reps = {classes[a], classes[b], classes[c], classes[d]};
                    bool ok = true;
                    for (const auto& t : tables) {
                        auto nums = numbers_from(A, t.log, t.nq, reps);
                        if (nums[1] != nums[2]) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    out.push_back(SymmetricFour{reps});
                    if (opt.stop_at_first) return out;
                }
    return out;
}

SymmetricFour translate_by_involution(const FinAbGroup& A, const SymmetricFour& H, const IntVec2& h) {
    if (A.mul(2, h) != IntVec2{0, 0}) throw std::invalid_argument("translation must have order at most 2");
    std::array<IntVec2, 4> reps;
    for (int k = 0; k < 4; ++k) reps[k] = A.add(H.reps[k], h);
    return make_symmetric_four(A, reps);
}

bool verify_nonexistence(const FinAbGroup& A, std::size_t budget) {
    SearchOptions opt;
    opt.budget = budget;
    opt.stop_at_first = true;
    return search_nonseparating(A, opt).empty();
}

Degree2Report degree2_refutation() {
    const FinAbGroup A(4, 2);
    Degree2Report rep;
    for (const auto& H : search_nonseparating(A)) {
        Degree2Entry e;
        e.H = H;
        std::set<i64> in;
        for (const auto& g : elements(A, H)) in.insert(A.index(g));
        bool all4 = true;
        for (i64 i = 0; i < A.order(); ++i)
            if (A.order_of(A.element(i)) == 4 && !in.count(i)) all4 = false;
        e.has_order4_classes = all4;
        const int twoA = int(in.count(A.index({0, 0}))) + int(in.count(A.index({2, 0})));
        e.one_of_2A = twoA == 1;
        if (e.realizable()) ++rep.realizable;
        rep.entries.push_back(e);
    }
    return rep;
}

std::pair<FinAbGroup, SymmetricFour> postcritical_group(const NetMapPresentation& p) {
    const FiniteAbelianPres pres = quotient_presentation(p.lambda1, 2);
    FinAbGroup A(pres.m, pres.n);
    std::array<IntVec2, 4> reps;
    for (int k = 0; k < 4; ++k) reps[k] = reduce_mod(p.postcritical[k], pres);
    return {A, make_symmetric_four(A, reps)};
}

bool constant_teich_check(const NetMapPresentation& p) {
    auto [A, H] = postcritical_group(p);
    return is_nonseparating(A, H);
}

} // namespace netmap
