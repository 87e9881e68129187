#pragma once

#include <compare>
#include <map>
#include <vector>

#include "symtor/equivariant.hpp"
#include "symtor/field.hpp"
#include "symtor/ideals.hpp"

namespace symtor {

// The positive homology multiplicities gamma_i^{mu,c}(I_n) of one ideal at
// one variable count, the raw data that the variable-count recursion acts on.
struct GammaKey {
    Partition mu;
    std::vector<int> c;
    int i = 0; // profile index: gamma_i = dim H~_{i-1}

    friend bool operator==(const GammaKey&, const GammaKey&) = default;
    friend std::strong_ordering operator<=>(const GammaKey&, const GammaKey&) = default;
};

class GammaTable {
public:
    GammaTable(int n, FieldSpec field) : n_(n), field_(field) {}

    int var_count() const { return n_; }
    const FieldSpec& field() const { return field_; }
    const std::map<GammaKey, long long>& entries() const { return entries_; }

    void set(GammaKey key, long long value);
    long long at(const GammaKey& key) const;

    friend bool operator==(const GammaTable&, const GammaTable&) = default;

private:
    int n_;
    FieldSpec field_;
    std::map<GammaKey, long long> entries_; // values strictly positive
};

// All positive gammas over the candidate partitions and admissible column
// vectors.  Throws on the zero ideal.
GammaTable base_gamma_table(const SymIdeal& I, const FieldSpec& field,
                            int threads = 0);

// Push a level-n table to m >= n variables, one increment at a time: each
// entry (mu, c, i) spawns (mu.0, c, i) and, when mu has no zero entry, the
// shifted entry (mu.mu_n, c + e_s, i).  This forward form is equivalent to
// the backward two-case rule for gamma at level n+1.
GammaTable propagate(const GammaTable& table, int m);

// Check the variable-increment (non-)vanishing clauses between the Tor
// supports induced by two consecutive tables:
//   (i)   appended 0: same homological index on both levels,
//   (ii)  0 < mu_{n+1} < mu_n never occurs at level n+1,
//   (iii) appended repeat of a positive last entry: index shifts by one.
bool nonvanishing_check(const GammaTable& level_n, const GammaTable& level_n1);

// Rebuild the block decomposition / Betti data encoded by a gamma table.
EquivariantTor tor_from_gamma(const GammaTable& table);
BettiTable betti_from_gamma(const GammaTable& table);

} // namespace symtor
