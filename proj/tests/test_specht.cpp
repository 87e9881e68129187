#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "symtor/homology.hpp"
#include "symtor/numeric.hpp"
#include "symtor/oracle.hpp"
#include "symtor/specht.hpp"

using namespace symtor;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Independent count of standard tableaux of the hook (arm, 1^leg): place
// 1..arm+leg bijectively, row and column increasing.  Exhaustive over all
// permutations, feasible for arm+leg <= 7.
long long count_standard_hook_tableaux(int arm, int leg) {
    const int n = arm + leg;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    long long count = 0;
    do {
        // cells: row = perm[0..arm-1], column = perm[0], perm[arm..n-1]
        bool ok = true;
        for (int i = 1; i < arm && ok; ++i)
            if (perm[static_cast<size_t>(i)] < perm[static_cast<size_t>(i - 1)]) ok = false;
        if (ok && leg > 0 && perm[static_cast<size_t>(arm)] < perm[0]) ok = false;
        for (int i = arm + 1; i < n && ok; ++i)
            if (perm[static_cast<size_t>(i)] < perm[static_cast<size_t>(i - 1)]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

BlockSignature sig(std::vector<Hook> hooks) { return BlockSignature(std::move(hooks)); }

} // namespace

TEST_CASE("hook dimensions") {
    CHECK(hook_dim(Hook{1, 0}) == 1);
    CHECK(hook_dim(Hook{2, 2}) == 3); // frozen from the tableau count below
    CHECK(hook_dim(Hook{3, 1}) == binomial(3, 1));
    // the extremal-value hook (p0+1, 1^{p1-1})
    for (int p0 = 0; p0 <= 4; ++p0)
        for (int p1 = 1; p1 <= 4; ++p1)
            CHECK(hook_dim(Hook{p0 + 1, p1 - 1}) == binomial(p0 + p1 - 1, p0));
}

TEST_CASE("hook dimension equals the standard tableau count") {
    for (int arm = 1; arm <= 5; ++arm)
        for (int leg = 0; leg + arm <= 7; ++leg)
            CHECK(hook_dim(Hook{arm, leg}) == count_standard_hook_tableaux(arm, leg));
}

TEST_CASE("hook transpose symmetry") {
    // (arm, 1^leg) and (leg+1, 1^{arm-1}) are transpose shapes
    for (int arm = 1; arm <= 6; ++arm)
        for (int leg = 0; leg <= 5; ++leg)
            CHECK(hook_dim(Hook{arm, leg}) == hook_dim(Hook{leg + 1, arm - 1}));
}

TEST_CASE("block_for") {
    CHECK(block_for(P({4, 4, 1}), {1, 0}) == sig({{1, 1}, {1, 0}}));
    CHECK(block_for(P({4, 4, 4}), {2}) == sig({{1, 2}}));
    CHECK(block_for(P({5, 2, 1}), {0, 0, 0}) == sig({{1, 0}, {1, 0}, {1, 0}}));
    // a trailing zero block becomes a row factor
    CHECK(block_for(P({5, 2, 0}), {0, 0}) == sig({{1, 0}, {1, 0}, {1, 0}}));
    CHECK(block_for(P({5, 5, 0}), {1}) == sig({{1, 1}, {1, 0}}));
    // with c = 0 every hook is a row
    CHECK(block_for(P({3, 3, 2, 2}), {0, 0}) == sig({{2, 0}, {2, 0}}));
    CHECK_THROWS_AS(block_for(P({5, 2, 1}), {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("block_dim") {
    CHECK(block_dim(sig({{1, 0}, {1, 0}, {1, 0}})) == 6);
    CHECK(block_dim(sig({{1, 1}, {1, 0}})) == 3);
    CHECK(block_dim(sig({{4, 0}})) == 1);
    CHECK(block_dim(sig({{1, 0}, {2, 0}})) == 3);
}

TEST_CASE("block_dim is invariant under permuting the hooks") {
    const std::vector<Hook> hooks = {{2, 1}, {1, 0}, {3, 2}};
    std::vector<Hook> p = hooks;
    std::sort(p.begin(), p.end());
    const long long expected = block_dim(sig(p));
    do {
        CHECK(block_dim(sig(p)) == expected);
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("trivial multiplicity") {
    CHECK(trivial_multiplicity(sig({{2, 0}, {1, 0}})) == 1);
    CHECK(trivial_multiplicity(sig({{1, 1}, {1, 0}})) == 0);
    CHECK(trivial_multiplicity(sig({{5, 0}})) == 1);
}

TEST_CASE("blocks account for the Koszul chain dimensions orbit by orbit") {
    // dim K_l(I) restricted to the orbit of mu equals
    //   sum over c of block_dim(mu, c) x #faces of cardinality l-|c| in
    //   delta_complex(I, mu, c),
    // with the left side counted exponent vector by exponent vector on the
    // expanded orbit ideal.  This ties the representation-theoretic
    // bookkeeping to an honest chain-level count.
    const std::vector<SymIdeal> ideals = {
        SymIdeal(3, {P({4, 1, 1}), P({5, 2, 0})}),
        SymIdeal(4, {P({2, 1, 0, 0})}),
        SymIdeal(5, {P({2, 2, 1, 0, 0}), P({3, 0, 0, 0, 0})}),
        SymIdeal(3, {P({0, 0, 0})}), // unit ideal
    };
    for (const SymIdeal& I : ideals) {
        const int n = I.var_count();
        const PlainIdeal J = orbit_plain_ideal(I);

        // all mu with entries <= 3
        std::vector<Partition> mus;
        std::vector<int> cur(static_cast<size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int idx, int prev) {
            if (idx == n) {
                mus.push_back(Partition(cur));
                return;
            }
            for (int v = prev; v >= 0; --v) {
                cur[static_cast<size_t>(idx)] = v;
                rec(idx + 1, v);
            }
        };
        rec(0, 3);

        for (const Partition& mu : mus) {
            // chain side
            std::vector<long long> chain(static_cast<size_t>(n) + 2, 0);
            for (const Multidegree& a : distinct_rearrangements(mu)) {
                const SimplicialComplex d = koszul_lower_complex(J, a);
                for (int l = 0; l <= n; ++l)
                    chain[static_cast<size_t>(l)] += d.face_count_of_card(l);
            }
            // block side
            std::vector<long long> blocks(static_cast<size_t>(n) + 2, 0);
            const std::vector<int> p = p_vector(mu);
            std::vector<int> c(p.size(), 0);
            bool more = true;
            while (more) {
                int csum = 0;
                for (int v : c) csum += v;
                const long long bdim = block_dim(block_for(mu, c));
                const SimplicialComplex d = delta_complex(I, mu, c);
                for (int l = csum; l <= n; ++l)
                    blocks[static_cast<size_t>(l)] += bdim * d.face_count_of_card(l - csum);
                more = false;
                for (size_t k = c.size(); k-- > 0;) {
                    if (c[k] < p[k]) {
                        ++c[k];
                        std::fill(c.begin() + static_cast<long>(k) + 1, c.end(), 0);
                        more = true;
                        break;
                    }
                }
            }
            CHECK(chain == blocks);
        }
    }
}
