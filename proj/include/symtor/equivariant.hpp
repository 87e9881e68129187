#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symtor/field.hpp"
#include "symtor/homology.hpp"
#include "symtor/ideals.hpp"
#include "symtor/specht.hpp"

namespace symtor {

// One summand of an orbit component of Tor: the induced block `sig` with
// multiplicity gamma_{i-|c|}^{mu,c}(I) > 0, remembering the column vector c
// it came from.
struct TorBlock {
    BlockSignature sig;
    long long multiplicity = 0;
    std::vector<int> c;

    friend bool operator==(const TorBlock&, const TorBlock&) = default;
};

// Graded Betti numbers beta_{i,j} as a finitely supported table.
class BettiTable {
public:
    void add(int i, long long j, long long value);
    long long at(int i, long long j) const;
    const std::map<std::pair<int, long long>, long long>& entries() const { return entries_; }
    std::vector<long long> totals() const; // column sums, index 0..max i
    int max_index() const;
    long long regularity() const; // max j - i over the support
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<std::pair<int, long long>, long long> entries_; // only non-zero
};

// The full decomposition of Tor_*(I, k) into orbit components and induced
// hook blocks.  Entries are keyed by (homological index i, orbit partition).
class EquivariantTor {
public:
    using Key = std::pair<int, Partition>;

    EquivariantTor(int n, FieldSpec field);

    int var_count() const { return n_; }
    const FieldSpec& field() const { return field_; }
    // In characteristic 0 < p <= n the block list describes the associated
    // graded of a filtration, not a direct sum decomposition.
    bool associated_graded_only() const;

    void add_block(int i, const Partition& mu, TorBlock block);
    const std::map<Key, std::vector<TorBlock>>& entries() const { return entries_; }
    const std::vector<TorBlock>* blocks(int i, const Partition& mu) const;

    // Total dimension of the orbit component (sum of block_dim x multiplicity).
    long long orbit_dim(int i, const Partition& mu) const;

private:
    int n_;
    FieldSpec field_;
    std::map<Key, std::vector<TorBlock>> entries_;
};

// Orbit partitions that can support a non-zero Tor component: everything
// componentwise below tilde(rho) for some maximal dual generator rho.  The
// unit ideal contributes only the zero partition.  Throws on the zero ideal.
std::vector<Partition> candidate_partitions(const SymIdeal& I);

// Blocks of Tor_i(I, k) in the orbit of mu: one term per column vector c
// with gamma_{i-|c|}^{mu,c}(I) > 0.
std::vector<TorBlock> tor_orbit(const SymIdeal& I, int i, const Partition& mu,
                                const FieldSpec& field);

// The whole table for 0 <= i <= n-1 over all candidate partitions.
EquivariantTor equivariant_tor(const SymIdeal& I, const FieldSpec& field,
                               int threads = 0);

// beta_{i,j}(I) = sum over |mu| = j of the orbit dimensions.
BettiTable graded_betti(const EquivariantTor& tor);

// beta_{i,a}(I) for a single multidegree: the orbit dimension divided by the
// orbit size (exact; a remainder would be an internal error).
long long multigraded_betti(const EquivariantTor& tor, int i, const Multidegree& a);

// gamma_i^{mu,0}(I) for all candidates: the invariant-part Betti numbers.
// Meaningful as fixed-space dimensions in characteristic 0 or > n; the
// char_warning flag is set otherwise.
struct InvariantBetti {
    std::map<std::pair<int, Partition>, long long> entries;
    bool char_warning = false;
};
InvariantBetti invariant_betti(const SymIdeal& I, const FieldSpec& field);

// Tor_i(R/I) orbit dimensions for a proper non-zero ideal: the convention
// shift Tor_i(I) = Tor_{i+1}(R/I) plus the Tor_0(R/I) = k entry at degree 0.
// This is the single adapter between the two homological indexings.
std::map<std::pair<int, Partition>, long long> quotient_tor_orbit_dims(
    const EquivariantTor& tor);

} // namespace symtor
