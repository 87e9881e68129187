#pragma once

#include <vector>

#include "symtor/field.hpp"
#include "symtor/ideals.hpp"
#include "symtor/linalg.hpp"
#include "symtor/simplicial.hpp"

namespace symtor {

// Reduced homology dimensions, indexed so that entry i holds dim H~_{i-1}.
// With this shift, entry i of gamma(I, mu, c) is the multiplicity that feeds
// homological degree i + |c| of Tor.
class HomologyProfile {
public:
    HomologyProfile() = default;
    explicit HomologyProfile(std::vector<long long> dims);

    // dim H~_{i-1}; zero outside the stored range.
    long long operator[](int i) const;
    bool all_zero() const { return dims_.empty(); }
    int max_index() const { return static_cast<int>(dims_.size()) - 1; }
    long long total() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

private:
    std::vector<long long> dims_; // trailing zeros trimmed
};

// Matrix of the boundary map C_k -> C_{k-1} in the basis of faces sorted
// lexicographically as vertex lists; entries in {-1,0,+1}, with the sign of
// removing vertex v from F equal to (-1)^{#{u in F : u <= v}}.
IntMatrix boundary_matrix(const SimplicialComplex& delta, int k);

// Exact reduced homology dimensions over the given field:
// dim H~_k = #faces of cardinality k+1 - rank d_k - rank d_{k+1}.
HomologyProfile reduced_homology_dims(const SimplicialComplex& delta,
                                      const FieldSpec& field);

// The complex on [s(mu)] whose faces F satisfy mu \ (c + e_F) in P(I).
// Requires 0 <= c <= p_vector(mu).
SimplicialComplex delta_complex(const SymIdeal& I, const Partition& mu,
                                const std::vector<int>& c);

// gamma_i^{mu,c}(I) = dim H~_{i-1}(delta_complex(I, mu, c)) as a profile.
HomologyProfile gamma(const SymIdeal& I, const Partition& mu,
                      const std::vector<int>& c, const FieldSpec& field);

// The complex on [n] whose faces F satisfy a - e_F >= 0 and x^{a-e_F} in J.
SimplicialComplex koszul_lower_complex(const PlainIdeal& J, const Multidegree& a);

} // namespace symtor
