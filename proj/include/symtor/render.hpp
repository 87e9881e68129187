#pragma once

#include <string>

#include "symtor/equivariant.hpp"
#include "symtor/partitions.hpp"
#include "symtor/specht.hpp"

namespace symtor {

std::string to_string(const Partition& mu);              // "(5,2,1)"
std::string to_string(const ExtendedPartition& rho);     // "(inf,1,0)"
std::string to_string(const Hook& h);                    // "(2,1,1)"
std::string to_string(const BlockSignature& pi);         // "Ind[(1,1),(1)]"

// Betti table in the Macaulay2 layout: row label d, column i, entry
// beta_{i,i+d}, dots for zeros, with a leading total row.
std::string render_betti_table(const BettiTable& table);

} // namespace symtor
