#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symtor/field.hpp"
#include "symtor/homology.hpp"
#include "symtor/ideals.hpp"

namespace symtor {

// Ground truth for every equivalence test: Tor dimensions computed one
// multidegree at a time from the Koszul complex, via
//     Tor_i(J, k)_a  iso  H~_{i-1}(Delta^J_a).
// Nothing here goes through the orbit formula: membership is plain
// componentwise domination over an explicit generator list, and symmetric
// ideals enter only after expanding every generator orbit.

class OracleResult {
public:
    void set(int i, Multidegree a, long long dim);
    long long at(int i, const Multidegree& a) const;
    const std::map<std::pair<int, Multidegree>, long long>& entries() const {
        return entries_;
    }

    friend bool operator==(const OracleResult&, const OracleResult&) = default;

private:
    std::map<std::pair<int, Multidegree>, long long> entries_; // positive dims
};

// The plain ideal generated by every rearrangement of every generator of I.
// Guarded at n <= 8 (the expansion has up to n! elements per generator).
PlainIdeal orbit_plain_ideal(const SymIdeal& I);

// All distinct rearrangements of mu, in lexicographic order.
std::vector<Multidegree> distinct_rearrangements(const Partition& mu);

// dim Tor_i(J, k)_a.
long long tor_dims_multidegree(const PlainIdeal& J, int i, const Multidegree& a,
                               const FieldSpec& field);
// Same, all homological indices at once (profile index i <-> Tor_i).
HomologyProfile tor_profile_multidegree(const PlainIdeal& J, const Multidegree& a,
                                        const FieldSpec& field);

// Tor of a plain ideal over its Taylor support: every lcm of a non-empty
// subset of the generators.
OracleResult tor_dims_plain(const PlainIdeal& J, const FieldSpec& field);

// dim Tor_i(I, k) restricted to the orbit of mu: the sum over all distinct
// rearrangements a of mu of tor_dims_multidegree on the expanded orbit ideal.
long long tor_dims_orbit_bruteforce(const SymIdeal& I, int i, const Partition& mu,
                                    const FieldSpec& field);
// Same, all indices at once.
std::vector<long long> tor_orbit_profile_bruteforce(const SymIdeal& I,
                                                    const Partition& mu,
                                                    const FieldSpec& field);

} // namespace symtor
