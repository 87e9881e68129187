#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace symtor {

// Exponent vector of a monomial, unsorted.
using Multidegree = std::vector<int>;

// A weakly decreasing tuple of non-negative integers of fixed length n.
// Trailing zeros are significant: (3,1) and (3,1,0) are different values,
// and extending by zeros is always an explicit operation (padded()).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    long long size() const; // |mu|, the number of boxes
    bool is_zero() const;

    Partition padded(int n) const;    // extend with zeros to length n >= length()
    Partition appended(int v) const;  // push one entry v <= last entry

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

// part(a): the weakly decreasing rearrangement of a multidegree.
Partition part_of(const Multidegree& a);

// Componentwise >= on equal-length vectors; throws on length mismatch.
bool dominates(const std::vector<int>& a, const std::vector<int>& b);
inline bool dominates(const Partition& a, const Partition& b) {
    return dominates(a.parts(), b.parts());
}

// Run-length view of a partition: mu = (d_1^{p_1},...,d_s^{p_s},0^{zero_count})
// with d_1 > ... > d_s > 0.
struct ShapeData {
    std::vector<int> values; // d_1 > ... > d_s > 0
    std::vector<int> mults;  // p_1, ..., p_s (all >= 1)
    int zero_count = 0;      // p_{s+1}
    int s() const { return static_cast<int>(values.size()); }
};

ShapeData shape_data(const Partition& mu);

// (p_1 - 1, ..., p_s - 1): the componentwise upper bound for column vectors c.
std::vector<int> p_vector(const Partition& mu);

// mu \ c: for each k, the last c_k copies of d_k drop to d_k - 1.
// Requires 0 <= c_k <= p_k (note: <= p_k, since callers use c + e_F).
Partition remove_columns(const Partition& mu, const std::vector<int>& c);

// Number of distinct rearrangements of mu, n! / (p_1! ... p_s! p_{s+1}!).
long long rearrangement_count(const Partition& mu);

// ---------------------------------------------------------------------------
// Extended partitions: entries are non-negative integers or the symbol
// "infinity", which compares strictly greater than every integer.

class ExtEntry {
public:
    constexpr ExtEntry() = default;
    static constexpr ExtEntry infinity() {
        ExtEntry e;
        e.inf_ = true;
        return e;
    }
    static ExtEntry finite(int v) {
        if (v < 0) throw std::invalid_argument("extended entry must be >= 0");
        ExtEntry e;
        e.v_ = v;
        return e;
    }

    constexpr bool is_infinite() const { return inf_; }
    int value() const {
        if (inf_) throw std::logic_error("value() on infinite entry");
        return v_;
    }

    friend constexpr bool operator==(ExtEntry a, ExtEntry b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtEntry a, ExtEntry b) {
        if (a.inf_ || b.inf_) return (a.inf_ ? 1 : 0) <=> (b.inf_ ? 1 : 0);
        return a.v_ <=> b.v_;
    }

private:
    bool inf_ = false;
    int v_ = 0;
};

class ExtendedPartition {
public:
    ExtendedPartition() = default;
    explicit ExtendedPartition(std::vector<ExtEntry> entries);
    // Convenience: -1 stands for infinity in the int form (parsing only).
    static ExtendedPartition from_ints_with_inf(const std::vector<int>& v);

    int length() const { return static_cast<int>(entries_.size()); }
    ExtEntry operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<ExtEntry>& entries() const { return entries_; }
    bool all_infinite() const;
    bool has_finite_entry() const { return !all_infinite(); }

    friend bool operator==(const ExtendedPartition&, const ExtendedPartition&) = default;
    friend std::strong_ordering operator<=>(const ExtendedPartition& a,
                                            const ExtendedPartition& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<ExtEntry> entries_;
};

// Componentwise <= with infinity greatest.
bool ext_leq(const ExtendedPartition& a, const ExtendedPartition& b);
// lambda <= rho with lambda an honest partition.
bool ext_dominated_by(const Partition& lambda, const ExtendedPartition& rho);

// Number of infinite entries.
int ell(const ExtendedPartition& rho);

// Run-length view of rho = (inf^{p0}, d_1^{p_1}, ..., d_s^{p_s}) with
// inf > d_1 > ... > d_s >= 0.  Unlike ShapeData, a trailing zero value is a
// block of its own here.
struct ExtShape {
    int inf_count = 0;       // p_0
    std::vector<int> values; // d_1 > ... > d_s >= 0
    std::vector<int> mults;  // p_1, ..., p_s
};
ExtShape ext_shape(const ExtendedPartition& rho);

// rho~ = ((d_1+1)^{p_0+p_1}, (d_2+1)^{p_2}, ..., (d_s+1)^{p_s}).
Partition tilde(const ExtendedPartition& rho); // throws if all entries infinite

// rho+ : infinities replaced by (largest finite entry) + 1.
Partition plus(const ExtendedPartition& rho); // throws if all entries infinite

// Entrywise min(entry, D); infinity caps to D.
Partition cap(const ExtendedPartition& rho, int D);

} // namespace symtor
