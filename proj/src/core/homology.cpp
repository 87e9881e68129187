#include "symtor/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace symtor {

HomologyProfile::HomologyProfile(std::vector<long long> dims) : dims_(std::move(dims)) {
    for (long long d : dims_)
        if (d < 0) throw std::invalid_argument("HomologyProfile: negative dimension");
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

long long HomologyProfile::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(dims_.size())) return 0;
    return dims_[static_cast<size_t>(i)];
}

long long HomologyProfile::total() const {
    long long t = 0;
    for (long long d : dims_) t += d;
    return t;
}

IntMatrix boundary_matrix(const SimplicialComplex& delta, int k) {
    const auto cols_faces = delta.faces_of_card(k + 1);
    const auto rows_faces = delta.faces_of_card(k);
    IntMatrix m(static_cast<int>(rows_faces.size()), static_cast<int>(cols_faces.size()));
    if (m.rows == 0 || m.cols == 0) return m;

    std::map<std::uint32_t, int> row_index;
    for (size_t i = 0; i < rows_faces.size(); ++i)
        row_index[rows_faces[i]] = static_cast<int>(i);

    for (size_t j = 0; j < cols_faces.size(); ++j) {
        const std::uint32_t face = cols_faces[j];
        int below = 0; // #{u in F : u <= v} as v runs through F in order
        for (std::uint32_t rem = face; rem != 0; rem &= rem - 1) {
            ++below;
            const std::uint32_t vbit = rem & (~rem + 1);
            const int sign = (below % 2 == 0) ? 1 : -1;
            m.at(row_index.at(face & ~vbit), static_cast<int>(j)) = sign;
        }
    }
    return m;
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& delta,
                                      const FieldSpec& field) {
    if (delta.is_void()) return HomologyProfile();
    const int top = delta.dimension(); // >= -1 here
    // ranks[k] = rank of d_k : C_k -> C_{k-1}, needed for k in 0..top+1.
    std::vector<int> ranks(static_cast<size_t>(top) + 3, 0);
    for (int k = 0; k <= top; ++k)
        ranks[static_cast<size_t>(k) + 1] = rank_over(boundary_matrix(delta, k), field);

    std::vector<long long> dims(static_cast<size_t>(top) + 2, 0);
    for (int k = -1; k <= top; ++k) {
        const long long chain_dim = delta.face_count_of_card(k + 1);
        const long long h = chain_dim - ranks[static_cast<size_t>(k) + 1] -
                            ranks[static_cast<size_t>(k) + 2];
        if (h < 0) throw std::logic_error("reduced_homology_dims: negative dimension");
        dims[static_cast<size_t>(k) + 1] = h; // profile index i = k + 1
    }
    return HomologyProfile(std::move(dims));
}

SimplicialComplex delta_complex(const SymIdeal& I, const Partition& mu,
                                const std::vector<int>& c) {
    const std::vector<int> p = p_vector(mu);
    if (c.size() != p.size())
        throw std::invalid_argument("delta_complex: c has wrong length");
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] < 0 || c[k] > p[k])
            throw std::invalid_argument("delta_complex: c out of range");

    const int s = static_cast<int>(p.size());
    std::vector<std::uint32_t> faces;
    std::vector<int> shifted(c.size());
    for (std::uint32_t f = 0; f < (1u << s); ++f) {
        for (int k = 0; k < s; ++k)
            shifted[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] + ((f >> k) & 1u);
        if (I.contains(remove_columns(mu, shifted))) faces.push_back(f);
        if (s == 0) break;
    }
    // Downward closed because P(I) is upward closed and dropping a vertex
    // from F only raises mu \ (c + e_F).
    return SimplicialComplex::from_faces(s, std::move(faces));
}

HomologyProfile gamma(const SymIdeal& I, const Partition& mu,
                      const std::vector<int>& c, const FieldSpec& field) {
    return reduced_homology_dims(delta_complex(I, mu, c), field);
}

SimplicialComplex koszul_lower_complex(const PlainIdeal& J, const Multidegree& a) {
    const int n = J.var_count();
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("koszul_lower_complex: length mismatch");
    for (int v : a)
        if (v < 0) throw std::invalid_argument("koszul_lower_complex: negative degree");

    std::uint32_t support = 0;
    for (int i = 0; i < n; ++i)
        if (a[static_cast<size_t>(i)] >= 1) support |= 1u << i;

    std::vector<std::uint32_t> faces;
    Multidegree b(a.size());
    // Subsets of the support are the only candidates with a - e_F >= 0.
    std::uint32_t f = support;
    while (true) {
        for (int i = 0; i < n; ++i)
            b[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - ((f >> i) & 1u);
        if (J.contains(b)) faces.push_back(f);
        if (f == 0) break;
        f = (f - 1) & support;
    }
    return SimplicialComplex::from_faces(n, std::move(faces));
}

} // namespace symtor
