#include "symtor/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace symtor {

void OracleResult::set(int i, Multidegree a, long long dim) {
    if (dim < 0) throw std::invalid_argument("OracleResult: negative dimension");
    if (dim == 0) return;
    entries_[{i, std::move(a)}] = dim;
}

long long OracleResult::at(int i, const Multidegree& a) const {
    const auto it = entries_.find({i, a});
    return it == entries_.end() ? 0 : it->second;
}

PlainIdeal orbit_plain_ideal(const SymIdeal& I) {
    if (I.var_count() > 8)
        throw std::invalid_argument(
            "orbit_plain_ideal: orbit expansion is limited to n <= 8");
    std::vector<Multidegree> gens;
    for (const Partition& g : I.min_gens())
        for (const Multidegree& a : distinct_rearrangements(g)) gens.push_back(a);
    return PlainIdeal(I.var_count(), std::move(gens));
}

std::vector<Multidegree> distinct_rearrangements(const Partition& mu) {
    Multidegree a = mu.parts();
    std::sort(a.begin(), a.end());
    std::vector<Multidegree> out;
    do {
        out.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

HomologyProfile tor_profile_multidegree(const PlainIdeal& J, const Multidegree& a,
                                        const FieldSpec& field) {
    return reduced_homology_dims(koszul_lower_complex(J, a), field);
}

long long tor_dims_multidegree(const PlainIdeal& J, int i, const Multidegree& a,
                               const FieldSpec& field) {
    return tor_profile_multidegree(J, a, field)[i];
}

OracleResult tor_dims_plain(const PlainIdeal& J, const FieldSpec& field) {
    const size_t r = J.gens().size();
    if (r > 20)
        throw std::invalid_argument("tor_dims_plain: too many generators");
    std::set<Multidegree> support;
    for (std::uint64_t mask = 1; mask < (1ull << r); ++mask) {
        Multidegree lcm(static_cast<size_t>(J.var_count()), 0);
        for (size_t k = 0; k < r; ++k) {
            if (!((mask >> k) & 1)) continue;
            const Multidegree& g = J.gens()[k];
            for (size_t j = 0; j < lcm.size(); ++j) lcm[j] = std::max(lcm[j], g[j]);
        }
        support.insert(std::move(lcm));
    }
    OracleResult out;
    for (const Multidegree& a : support) {
        const HomologyProfile prof = tor_profile_multidegree(J, a, field);
        for (int i = 0; i <= prof.max_index(); ++i)
            if (prof[i] > 0) out.set(i, a, prof[i]);
    }
    return out;
}

std::vector<long long> tor_orbit_profile_bruteforce(const SymIdeal& I,
                                                    const Partition& mu,
                                                    const FieldSpec& field) {
    const PlainIdeal J = orbit_plain_ideal(I);
    std::vector<long long> dims(static_cast<size_t>(I.var_count()) + 2, 0);
    for (const Multidegree& a : distinct_rearrangements(mu)) {
        const HomologyProfile prof = tor_profile_multidegree(J, a, field);
        for (int i = 0; i <= prof.max_index(); ++i)
            dims[static_cast<size_t>(i)] += prof[i];
    }
    return dims;
}

long long tor_dims_orbit_bruteforce(const SymIdeal& I, int i, const Partition& mu,
                                    const FieldSpec& field) {
    if (i < 0) return 0;
    const std::vector<long long> dims = tor_orbit_profile_bruteforce(I, mu, field);
    return i < static_cast<int>(dims.size()) ? dims[static_cast<size_t>(i)] : 0;
}

} // namespace symtor
