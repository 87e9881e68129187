#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "support/corpus.hpp"
#include "symtor/equivariant.hpp"
#include "symtor/oracle.hpp"
#include "symtor/render.hpp"

using namespace symtor;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

const SymIdeal& worked_ideal() {
    static const SymIdeal I(3, {P({4, 1, 1}), P({5, 2, 0})});
    return I;
}

BlockSignature sig(std::vector<Hook> hooks) { return BlockSignature(std::move(hooks)); }

} // namespace

TEST_CASE("candidate partitions") {
    const auto cands = candidate_partitions(worked_ideal());
    const std::set<Partition> set(cands.begin(), cands.end());
    for (const Partition& mu :
         {P({5, 5, 1}), P({4, 4, 4}), P({5, 2, 1}), P({4, 1, 1}), P({5, 2, 0}),
          P({4, 4, 1}), P({5, 5, 0}), P({0, 0, 0})})
        CHECK(set.count(mu) == 1);
    CHECK(set.count(P({5, 5, 2})) == 0);
    // every candidate is below one of the tilde bounds
    for (const Partition& mu : cands)
        CHECK((dominates(P({5, 5, 1}), mu) || dominates(P({4, 4, 4}), mu)));

    CHECK(candidate_partitions(SymIdeal(2, {P({0, 0})})) ==
          std::vector<Partition>{P({0, 0})});
    CHECK_THROWS_AS(candidate_partitions(SymIdeal(2, {})), std::invalid_argument);

    // generators are always candidates
    for (const SymIdeal& I : testsupport::random_ideals(3, 15, 99, 4)) {
        const auto cs = candidate_partitions(I);
        const std::set<Partition> cset(cs.begin(), cs.end());
        for (const Partition& g : I.min_gens()) CHECK(cset.count(g) == 1);
    }
}

TEST_CASE("tor_orbit") {
    const FieldSpec q = FieldSpec::rationals();
    const auto t2 = tor_orbit(worked_ideal(), 2, P({5, 5, 1}), q);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].sig == sig({{1, 1}, {1, 0}}));
    CHECK(t2[0].multiplicity == 1);
    CHECK(t2[0].c == std::vector<int>{1, 0});

    const auto t1 = tor_orbit(worked_ideal(), 1, P({5, 2, 1}), q);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].sig == sig({{1, 0}, {1, 0}, {1, 0}}));
    CHECK(t1[0].multiplicity == 1);

    CHECK(tor_orbit(worked_ideal(), 1, P({3, 1, 0}), q).empty());
}

TEST_CASE("equivariant table of the worked ideal") {
    const EquivariantTor tor = equivariant_tor(worked_ideal(), FieldSpec::rationals());
    CHECK_FALSE(tor.associated_graded_only());

    using Entry = std::tuple<int, Partition, BlockSignature, long long>;
    std::vector<Entry> got;
    for (const auto& [key, blocks] : tor.entries())
        for (const TorBlock& b : blocks)
            got.emplace_back(key.first, key.second, b.sig, b.multiplicity);

    const std::vector<Entry> expected = {
        {0, P({4, 1, 1}), sig({{1, 0}, {2, 0}}), 1},
        {0, P({5, 2, 0}), sig({{1, 0}, {1, 0}, {1, 0}}), 1},
        {1, P({4, 4, 1}), sig({{1, 1}, {1, 0}}), 1},
        {1, P({5, 2, 1}), sig({{1, 0}, {1, 0}, {1, 0}}), 1},
        {1, P({5, 5, 0}), sig({{1, 1}, {1, 0}}), 1},
        {2, P({4, 4, 4}), sig({{1, 2}}), 1},
        {2, P({5, 5, 1}), sig({{1, 1}, {1, 0}}), 1},
    };
    CHECK(got == expected);

    CHECK(tor.orbit_dim(0, P({4, 1, 1})) == 3);
    CHECK(tor.orbit_dim(1, P({5, 2, 1})) == 6);
    CHECK(tor.orbit_dim(2, P({4, 4, 4})) == 1);
    CHECK(tor.orbit_dim(2, P({5, 5, 1})) == 3);
}

TEST_CASE("graded betti of the worked ideal") {
    const BettiTable t = graded_betti(equivariant_tor(worked_ideal(), FieldSpec::rationals()));
    // keyed by (homological index, total degree); the table's rows are j - i
    const std::map<std::pair<int, long long>, long long> expected = {
        {{0, 6}, 3}, {{0, 7}, 6}, {{1, 8}, 6}, {{1, 9}, 3},
        {{1, 10}, 3}, {{2, 11}, 3}, {{2, 12}, 1},
    };
    CHECK(t.entries() == expected);
    CHECK(t.totals() == std::vector<long long>{9, 12, 4});
}

TEST_CASE("betti table rendering matches the golden layout") {
    const BettiTable t = graded_betti(equivariant_tor(worked_ideal(), FieldSpec::rationals()));
    const std::string expected =
        "       0  1 2\n"
        "total: 9 12 4\n"
        "    6: 3  . .\n"
        "    7: 6  6 .\n"
        "    8: .  3 .\n"
        "    9: .  3 3\n"
        "   10: .  . 1\n";
    CHECK(render_betti_table(t) == expected);
}

TEST_CASE("graded betti for two variables") {
    const SymIdeal I2(2, {P({5, 1}), P({2, 2})});
    const BettiTable t = graded_betti(equivariant_tor(I2, FieldSpec::rationals()));
    CHECK(t.totals() == std::vector<long long>{3, 2});
    const std::map<std::pair<int, long long>, long long> expected = {
        {{0, 4}, 1}, {{0, 6}, 2}, {{1, 7}, 2}};
    CHECK(t.entries() == expected);
    const std::string rendered = render_betti_table(t);
    CHECK(rendered.find("total: 3 2\n") != std::string::npos);
}

TEST_CASE("unit ideal has only the trivial block in degree zero") {
    const SymIdeal unit(3, {P({0, 0, 0})});
    const EquivariantTor tor = equivariant_tor(unit, FieldSpec::rationals());
    REQUIRE(tor.entries().size() == 1);
    const auto& [key, blocks] = *tor.entries().begin();
    CHECK(key.first == 0);
    CHECK(key.second == P({0, 0, 0}));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].sig == sig({{3, 0}}));
    CHECK(blocks[0].multiplicity == 1);
    CHECK(graded_betti(tor).at(0, 0) == 1);
}

TEST_CASE("principal orbit ideal in two variables") {
    const SymIdeal I(2, {P({1, 1})});
    const EquivariantTor tor = equivariant_tor(I, FieldSpec::rationals());
    CHECK(tor.orbit_dim(0, P({1, 1})) == 1);
    const auto* blocks = tor.blocks(0, P({1, 1}));
    REQUIRE(blocks != nullptr);
    CHECK((*blocks)[0].sig == sig({{2, 0}})); // trivial module S^(2)
    CHECK(tor.orbit_dim(1, P({1, 1})) == 0);
    CHECK(tor.orbit_dim(1, P({2, 1})) == 0);
    // cross-check against the brute force
    CHECK(tor_dims_orbit_bruteforce(I, 0, P({1, 1}), FieldSpec::rationals()) == 1);
    CHECK(tor_dims_orbit_bruteforce(I, 1, P({2, 1}), FieldSpec::rationals()) == 0);
}

TEST_CASE("multigraded betti numbers") {
    const EquivariantTor tor = equivariant_tor(worked_ideal(), FieldSpec::rationals());
    CHECK(multigraded_betti(tor, 1, {5, 2, 1}) == 1);
    CHECK(multigraded_betti(tor, 1, {1, 5, 2}) == 1);
    CHECK(multigraded_betti(tor, 2, {5, 5, 1}) == 1);
    CHECK(multigraded_betti(tor, 2, {5, 1, 5}) == 1);
    CHECK(multigraded_betti(tor, 0, {9, 9, 9}) == 0);
    CHECK(multigraded_betti(tor, 2, {4, 4, 4}) == 1);

    // oracle cross-check at the orbit level
    const PlainIdeal J = orbit_plain_ideal(worked_ideal());
    CHECK(tor_dims_multidegree(J, 1, {5, 2, 1}, FieldSpec::rationals()) == 1);
    CHECK(tor_dims_multidegree(J, 2, {5, 5, 1}, FieldSpec::rationals()) == 1);
}

TEST_CASE("invariant betti numbers") {
    const InvariantBetti inv = invariant_betti(worked_ideal(), FieldSpec::rationals());
    CHECK_FALSE(inv.char_warning);
    const std::map<std::pair<int, Partition>, long long> expected = {
        {{0, P({4, 1, 1})}, 1}, {{0, P({5, 2, 0})}, 1}, {{1, P({5, 2, 1})}, 1}};
    CHECK(inv.entries == expected);

    // the invariant-part values equal Tor of the unsymmetrization
    const PlainIdeal J = unsymmetrize(3, worked_ideal().min_gens());
    const OracleResult plain = tor_dims_plain(J, FieldSpec::rationals());
    std::map<std::pair<int, Partition>, long long> plain_map;
    for (const auto& [key, dim] : plain.entries())
        plain_map[{key.first, part_of(key.second)}] = dim;
    CHECK(inv.entries == plain_map);

    // trivial-block route gives the same numbers at c = 0
    const EquivariantTor tor = equivariant_tor(worked_ideal(), FieldSpec::rationals());
    for (const auto& [key, g] : inv.entries) {
        long long via_blocks = 0;
        if (const auto* blocks = tor.blocks(key.first, key.second))
            for (const TorBlock& b : *blocks)
                if (std::all_of(b.c.begin(), b.c.end(), [](int x) { return x == 0; }))
                    via_blocks += trivial_multiplicity(b.sig) * b.multiplicity;
        CHECK(via_blocks == g);
    }

    const InvariantBetti small = invariant_betti(worked_ideal(), FieldSpec::prime(2));
    CHECK(small.char_warning);
    const InvariantBetti big = invariant_betti(worked_ideal(), FieldSpec::prime(5));
    CHECK_FALSE(big.char_warning);

    const InvariantBetti unit = invariant_betti(SymIdeal(2, {P({0, 0})}),
                                                FieldSpec::rationals());
    const std::map<std::pair<int, Partition>, long long> unit_expected = {
        {{0, P({0, 0})}, 1}};
    CHECK(unit.entries == unit_expected);
}

TEST_CASE("associated graded marker in small characteristic") {
    CHECK(equivariant_tor(worked_ideal(), FieldSpec::prime(2)).associated_graded_only());
    CHECK(equivariant_tor(worked_ideal(), FieldSpec::prime(3)).associated_graded_only());
    CHECK_FALSE(equivariant_tor(worked_ideal(), FieldSpec::prime(5)).associated_graded_only());
}

TEST_CASE("table shape is characteristic independent on sample ideals") {
    for (const SymIdeal& I : testsupport::random_ideals(3, 10, 321, 3)) {
        const BettiTable t0 = graded_betti(equivariant_tor(I, FieldSpec::rationals()));
        const BettiTable t2 = graded_betti(equivariant_tor(I, FieldSpec::prime(2)));
        CHECK(t0.max_index() == t2.max_index());
        CHECK(t0.regularity() == t2.regularity());
    }
}

TEST_CASE("quotient adapter shifts the homological index") {
    const EquivariantTor tor = equivariant_tor(worked_ideal(), FieldSpec::rationals());
    const auto quotient = quotient_tor_orbit_dims(tor);
    CHECK(quotient.at({0, P({0, 0, 0})}) == 1);
    CHECK(quotient.at({1, P({4, 1, 1})}) == 3);
    CHECK(quotient.at({3, P({4, 4, 4})}) == 1);
    CHECK(quotient.at({3, P({5, 5, 1})}) == 3);
    CHECK(quotient.size() == tor.entries().size() + 1);
}

TEST_CASE("threaded and serial sweeps agree") {
    const EquivariantTor serial = equivariant_tor(worked_ideal(), FieldSpec::rationals(), 1);
    const EquivariantTor threaded = equivariant_tor(worked_ideal(), FieldSpec::rationals(), 4);
    CHECK(serial.entries() == threaded.entries());
}
