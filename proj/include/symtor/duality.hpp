#pragma once

#include <compare>
#include <vector>

#include "symtor/ideals.hpp"
#include "symtor/partitions.hpp"

namespace symtor {

// The dual generators of I: the unique extended partitions mu^1,...,mu^t
// whose ideals Q_mu intersect irredundantly to I.  Equivalently, `all` holds
// the componentwise-maximal mu with O_mu = {lambda <= mu} contained in the
// complement of P(I), and `maximal` the maximal elements of `all` under the
// order preceq below.
struct DualGeneratorSet {
    std::vector<ExtendedPartition> all;     // Lambda*(I), an antichain under <=
    std::vector<ExtendedPartition> maximal; // the preceq-maximal subset
    int cap_value = 0;                      // D used by the search
};

// Computed by brute force over extended partitions with finite entries in
// {0,...,D-1}, D = 1 + max generator entry.  This is justified by the cap
// equivalence
//     O_mu subset of O(I)  <=>  cap(mu, D) not in P(I):
// cap(mu,D) <= mu lies in O_mu, giving one direction; conversely if some
// lambda <= mu lies in P(I), it dominates a generator g, and capping at D
// preserves that domination (generator entries are < D), so cap(mu,D) >=
// cap(lambda,D) >= g.  Maximal elements need no finite entry >= D, since
// raising such an entry to infinity does not change cap(.,D).
// Throws on the zero ideal (its only dual generator would be all-infinite).
//
// cap_override widens the search alphabet (any value >= the default D gives
// the same result); 0 selects the default.
DualGeneratorSet dual_generators(const SymIdeal& I, int cap_override = 0);

// mu preceq rho: tilde(mu) <= tilde(rho) and |plus(mu)| <= |plus(rho)|.
bool preceq(const ExtendedPartition& mu, const ExtendedPartition& rho);

std::vector<ExtendedPartition> maximal_dual_generators(const SymIdeal& I);

// An extremal corner of the Betti table of R/I: Tor_index(R/I) is non-zero
// in the orbit of `degree` and everything above-right of it vanishes.
struct ExtremalPair {
    int index = 0;     // homological index for R/I
    Partition degree;  // tilde(rho)
    long long value = 0;

    friend bool operator==(const ExtremalPair&, const ExtremalPair&) = default;
    friend std::strong_ordering operator<=>(const ExtremalPair&, const ExtremalPair&) = default;
};

// One pair (n - ell(rho), tilde(rho)) per maximal dual generator
// rho = (inf^{p0}, d1^{p1}, ...), with value binomial(p0+p1-1, p0).
std::vector<ExtremalPair> extremal_report(const SymIdeal& I);

// reg(R/I) = max |mu+| and pd(R/I) = max (n - ell(mu)) over mu in Lambda*(I).
// Undefined (throws) for the zero and unit ideals.
int regularity_quotient(const SymIdeal& I);
int projective_dimension_quotient(const SymIdeal& I);

} // namespace symtor
