#pragma once

#include <vector>

#include "symtor/partitions.hpp"

namespace symtor {

// A symmetric-group-invariant monomial ideal in n variables, stored as the
// antichain of componentwise-minimal generating partitions.  The constructor
// accepts any generator list and minimalizes eagerly; every accessor may
// assume the antichain invariant afterwards.
//
// The zero ideal (no generators) and the unit ideal (single generator 0^n)
// are both legal values; operations that are undefined on them throw.
class SymIdeal {
public:
    SymIdeal(int n, std::vector<Partition> generators);

    int var_count() const { return n_; }
    const std::vector<Partition>& min_gens() const { return min_gens_; }

    bool is_zero() const { return min_gens_.empty(); }
    bool is_unit() const {
        return min_gens_.size() == 1 && min_gens_.front().is_zero();
    }

    // lambda in P(I): lambda dominates some minimal generator.
    bool contains(const Partition& lambda) const;
    bool contains_multidegree(const Multidegree& a) const;

    int max_generator_entry() const; // 0 for the zero/unit ideal

    friend bool operator==(const SymIdeal&, const SymIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Partition> min_gens_; // sorted antichain
};

// A plain (not symmetrized) monomial ideal, stored as a non-redundant set of
// exponent vectors.  Membership is componentwise domination with no sorting.
class PlainIdeal {
public:
    PlainIdeal(int n, std::vector<Multidegree> generators);

    int var_count() const { return n_; }
    const std::vector<Multidegree>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool contains(const Multidegree& a) const;

    friend bool operator==(const PlainIdeal&, const PlainIdeal&) = default;

private:
    int n_ = 0;
    std::vector<Multidegree> gens_; // sorted, minimal under domination
};

// The plain ideal with one monomial x^lambda per listed partition.
PlainIdeal unsymmetrize(int n, const std::vector<Partition>& generators);

} // namespace symtor
