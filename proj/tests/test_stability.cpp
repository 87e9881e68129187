#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "support/corpus.hpp"
#include "symtor/render.hpp"
#include "symtor/stability.hpp"

using namespace symtor;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

const SymIdeal& two_var_ideal() {
    static const SymIdeal I(2, {P({5, 1}), P({2, 2})});
    return I;
}

SymIdeal padded_ideal(const SymIdeal& I, int m) {
    std::vector<Partition> gens;
    for (const Partition& g : I.min_gens()) gens.push_back(g.padded(m));
    return SymIdeal(m, std::move(gens));
}

std::map<GammaKey, long long> entries_of(const GammaTable& t) { return t.entries(); }

} // namespace

TEST_CASE("base gamma table of the two-variable ideal") {
    const GammaTable t = base_gamma_table(two_var_ideal(), FieldSpec::rationals());
    const std::map<GammaKey, long long> expected = {
        {GammaKey{P({2, 2}), {0}, 0}, 1},
        {GammaKey{P({5, 1}), {0, 0}, 0}, 1},
        {GammaKey{P({5, 2}), {0, 0}, 1}, 1},
    };
    CHECK(entries_of(t) == expected);
}

TEST_CASE("base gamma table of the worked three-variable ideal") {
    const SymIdeal I(3, {P({4, 1, 1}), P({5, 2, 0})});
    const GammaTable t = base_gamma_table(I, FieldSpec::rationals());
    const std::map<GammaKey, long long> expected = {
        {GammaKey{P({4, 1, 1}), {0, 0}, 0}, 1},
        {GammaKey{P({4, 4, 1}), {1, 0}, 0}, 1},
        {GammaKey{P({4, 4, 4}), {2}, 0}, 1},
        {GammaKey{P({5, 2, 0}), {0, 0}, 0}, 1},
        {GammaKey{P({5, 2, 1}), {0, 0, 0}, 1}, 1},
        {GammaKey{P({5, 5, 0}), {1}, 0}, 1},
        {GammaKey{P({5, 5, 1}), {1, 0}, 1}, 1},
    };
    CHECK(entries_of(t) == expected);
}

TEST_CASE("base gamma table of the unit ideal") {
    const GammaTable t =
        base_gamma_table(SymIdeal(2, {P({0, 0})}), FieldSpec::rationals());
    const std::map<GammaKey, long long> expected = {{GammaKey{P({0, 0}), {}, 0}, 1}};
    CHECK(entries_of(t) == expected);
    CHECK_THROWS_AS(base_gamma_table(SymIdeal(2, {}), FieldSpec::rationals()),
                    std::invalid_argument);
}

TEST_CASE("propagation to four variables reproduces the golden gammas") {
    const GammaTable base = base_gamma_table(two_var_ideal(), FieldSpec::rationals());
    const GammaTable t4 = propagate(base, 4);
    const std::map<GammaKey, long long> expected = {
        {GammaKey{P({2, 2, 0, 0}), {0}, 0}, 1},
        {GammaKey{P({2, 2, 2, 0}), {1}, 0}, 1},
        {GammaKey{P({2, 2, 2, 2}), {2}, 0}, 1},
        {GammaKey{P({5, 1, 0, 0}), {0, 0}, 0}, 1},
        {GammaKey{P({5, 1, 1, 0}), {0, 1}, 0}, 1},
        {GammaKey{P({5, 1, 1, 1}), {0, 2}, 0}, 1},
        {GammaKey{P({5, 2, 0, 0}), {0, 0}, 1}, 1},
        {GammaKey{P({5, 2, 2, 0}), {0, 1}, 1}, 1},
        {GammaKey{P({5, 2, 2, 2}), {0, 2}, 1}, 1},
    };
    CHECK(entries_of(t4) == expected);
}

TEST_CASE("propagation is the identity at m = n") {
    const GammaTable base = base_gamma_table(two_var_ideal(), FieldSpec::rationals());
    CHECK(propagate(base, 2) == base);
    CHECK_THROWS_AS(propagate(base, 1), std::invalid_argument);
}

TEST_CASE("propagated tables match direct recomputation") {
    for (int n = 2; n <= 3; ++n) {
        for (const SymIdeal& I : testsupport::random_ideals(n, 12, 2024 + n, 3)) {
            const GammaTable base = base_gamma_table(I, FieldSpec::rationals());
            for (int m = n + 1; m <= n + 2; ++m) {
                const GammaTable direct =
                    base_gamma_table(padded_ideal(I, m), FieldSpec::rationals());
                CHECK(propagate(base, m) == direct);
            }
        }
    }
}

TEST_CASE("betti tables from propagated gammas match the golden tables") {
    const GammaTable base = base_gamma_table(two_var_ideal(), FieldSpec::rationals());

    const BettiTable b2 = betti_from_gamma(base);
    CHECK(b2.totals() == std::vector<long long>{3, 2});
    const std::string r2 = render_betti_table(b2);
    CHECK(r2.find("total: 3 2\n") != std::string::npos);
    // the golden two-variable table keeps its empty middle row
    const std::string expected2 =
        "       0 1\n"
        "total: 3 2\n"
        "    4: 1 .\n"
        "    5: . .\n"
        "    6: 2 2\n";
    CHECK(r2 == expected2);

    const BettiTable b4 = betti_from_gamma(propagate(base, 4));
    CHECK(b4.totals() == std::vector<long long>{18, 32, 19, 4});
    const std::map<std::pair<int, long long>, long long> expected4 = {
        {{0, 4}, 6},  {{0, 6}, 12}, {{1, 6}, 8},  {{1, 7}, 24},
        {{2, 8}, 7},  {{2, 9}, 12}, {{3, 11}, 4},
    };
    CHECK(b4.entries() == expected4);
    CHECK(render_betti_table(b4).find("total: 18 32 19 4\n") != std::string::npos);
}

TEST_CASE("block structure at four variables matches the golden modules") {
    const GammaTable base = base_gamma_table(two_var_ideal(), FieldSpec::rationals());
    const EquivariantTor t4 = tor_from_gamma(propagate(base, 4));
    auto only_sig = [&](int i, const Partition& mu) {
        const auto* blocks = t4.blocks(i, mu);
        REQUIRE(blocks != nullptr);
        REQUIRE(blocks->size() == 1);
        REQUIRE((*blocks)[0].multiplicity == 1);
        return (*blocks)[0].sig;
    };
    auto sig = [](std::vector<Hook> hooks) { return BlockSignature(std::move(hooks)); };
    CHECK(only_sig(0, P({2, 2, 0, 0})) == sig({{2, 0}, {2, 0}}));
    CHECK(only_sig(0, P({5, 1, 0, 0})) == sig({{1, 0}, {1, 0}, {2, 0}}));
    CHECK(only_sig(1, P({2, 2, 2, 0})) == sig({{2, 1}, {1, 0}}));
    CHECK(only_sig(1, P({5, 1, 1, 0})) == sig({{1, 0}, {1, 1}, {1, 0}}));
    CHECK(only_sig(1, P({5, 2, 0, 0})) == sig({{1, 0}, {1, 0}, {2, 0}}));
    CHECK(only_sig(2, P({2, 2, 2, 2})) == sig({{2, 2}}));
    CHECK(only_sig(2, P({5, 1, 1, 1})) == sig({{1, 0}, {1, 2}}));
    CHECK(only_sig(2, P({5, 2, 2, 0})) == sig({{1, 0}, {1, 1}, {1, 0}}));
    CHECK(only_sig(3, P({5, 2, 2, 2})) == sig({{1, 0}, {1, 2}}));
}

TEST_CASE("tor_from_gamma agrees with the direct equivariant table") {
    const SymIdeal I(3, {P({4, 1, 1}), P({5, 2, 0})});
    const GammaTable base = base_gamma_table(I, FieldSpec::rationals());
    const EquivariantTor via_gamma = tor_from_gamma(base);
    const EquivariantTor direct = equivariant_tor(I, FieldSpec::rationals());
    CHECK(via_gamma.entries() == direct.entries());
}

TEST_CASE("nonvanishing clauses hold between consecutive levels") {
    for (int n = 2; n <= 3; ++n) {
        for (const SymIdeal& I : testsupport::random_ideals(n, 10, 555 + n, 3)) {
            const GammaTable tn = base_gamma_table(I, FieldSpec::rationals());
            const GammaTable tn1 =
                base_gamma_table(padded_ideal(I, n + 1), FieldSpec::rationals());
            CHECK(nonvanishing_check(tn, tn1));
        }
    }
    // trivial ideal
    const GammaTable u2 = base_gamma_table(SymIdeal(2, {P({0, 0})}), FieldSpec::rationals());
    const GammaTable u3 = base_gamma_table(SymIdeal(3, {P({0, 0, 0})}), FieldSpec::rationals());
    CHECK(nonvanishing_check(u2, u3));
}

TEST_CASE("intermediate appended values kill the whole orbit") {
    // clause (ii): 0 < mu_{n+1} < mu_n leaves no Tor at level n+1
    const SymIdeal I3 = padded_ideal(two_var_ideal(), 3);
    const FieldSpec q = FieldSpec::rationals();
    for (const Partition& mu : {P({5, 2, 1}), P({2, 2, 1}), P({5, 1, 1})}) {
        if (mu[2] == 0 || mu[2] == mu[1]) continue;
        const std::vector<int> p = p_vector(mu);
        std::vector<int> c(p.size(), 0);
        bool more = true;
        while (more) {
            CHECK(gamma(I3, mu, c, q) == HomologyProfile());
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
    }
}

TEST_CASE("level and field mismatches are rejected") {
    const GammaTable t2 = base_gamma_table(two_var_ideal(), FieldSpec::rationals());
    const GammaTable t4 = propagate(t2, 4);
    CHECK_THROWS_AS(nonvanishing_check(t2, t4), std::invalid_argument);
    const GammaTable t3p = base_gamma_table(padded_ideal(two_var_ideal(), 3),
                                            FieldSpec::prime(2));
    CHECK_THROWS_AS(nonvanishing_check(t2, t3p), std::invalid_argument);
}
