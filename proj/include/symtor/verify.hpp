#pragma once

#include <vector>

#include "symtor/equivariant.hpp"
#include "symtor/field.hpp"
#include "symtor/ideals.hpp"

namespace symtor {

// Cross-check of the block formula against the Koszul brute force, the
// master correctness property: for every homological index and candidate
// orbit, the summed block dimensions must equal the oracle's orbit dimension,
// and orbits one box beyond the candidate bound must vanish outright.

struct OrbitCheck {
    int i = 0;
    Partition mu;
    long long formula = 0;
    long long oracle = 0;
    bool pass = false;
};

struct BeyondCheck {
    Partition mu;
    long long oracle_total = 0;
    bool pass = false;
};

struct VerifyOutcome {
    bool pass = true;
    std::vector<OrbitCheck> orbit;
    std::vector<BeyondCheck> beyond;
};

// All partitions obtained from mu by adding a single box.
std::vector<Partition> one_box_extensions(const Partition& mu);

VerifyOutcome verify_against_oracle(const SymIdeal& I, const FieldSpec& field,
                                    int threads = 0);

} // namespace symtor
