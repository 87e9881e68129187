#pragma once

#include <compare>
#include <vector>

#include "symtor/partitions.hpp"

namespace symtor {

// The hook partition (arm, 1^leg): one row of length arm plus leg extra
// boxes in the first column.
struct Hook {
    int arm = 1; // >= 1
    int leg = 0; // >= 0
    int boxes() const { return arm + leg; }
    friend bool operator==(const Hook&, const Hook&) = default;
    friend std::strong_ordering operator<=>(const Hook&, const Hook&) = default;
};

// A sequence of hooks summing to n, describing the representation induced
// from the external tensor product of the hook Specht modules along the
// corresponding Young subgroup.  A trailing one-row factor of size p_{s+1}
// appears as the final hook (p_{s+1}, 1^0); zero-size factors are dropped so
// that equality of signatures is canonical.
class BlockSignature {
public:
    BlockSignature() = default;
    explicit BlockSignature(std::vector<Hook> hooks);

    const std::vector<Hook>& hooks() const { return hooks_; }
    int total() const; // n

    friend bool operator==(const BlockSignature&, const BlockSignature&) = default;
    friend std::strong_ordering operator<=>(const BlockSignature& a,
                                            const BlockSignature& b) {
        return a.hooks_ <=> b.hooks_;
    }

private:
    std::vector<Hook> hooks_;
};

// Number of standard tableaux of shape (arm, 1^leg): binomial(arm+leg-1, leg).
long long hook_dim(const Hook& h);

// The signature ((p_1-c_1, 1^{c_1}), ..., (p_s-c_s, 1^{c_s}), (p_{s+1}))
// attached to the orbit mu and column vector c.  Requires 0 <= c <= p(mu).
BlockSignature block_for(const Partition& mu, const std::vector<int>& c);

// Dimension of the induced module: the index of the Young subgroup times the
// product of the factor dimensions.
long long block_dim(const BlockSignature& pi);

// Multiplicity of the trivial module: 1 iff every factor is a single row.
int trivial_multiplicity(const BlockSignature& pi);

} // namespace symtor
