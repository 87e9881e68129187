#include "symtor/verify.hpp"

#include <algorithm>
#include <set>

#include "symtor/oracle.hpp"
#include "symtor/parallel.hpp"

namespace symtor {

std::vector<Partition> one_box_extensions(const Partition& mu) {
    std::vector<Partition> out;
    for (int i = 0; i < mu.length(); ++i) {
        if (i > 0 && mu[i - 1] == mu[i]) continue;
        std::vector<int> p = mu.parts();
        p[static_cast<size_t>(i)] += 1;
        out.push_back(Partition(std::move(p)));
    }
    return out;
}

VerifyOutcome verify_against_oracle(const SymIdeal& I, const FieldSpec& field,
                                    int threads) {
    const int n = I.var_count();
    const EquivariantTor tor = equivariant_tor(I, field, threads);
    const std::vector<Partition> candidates = candidate_partitions(I);

    std::set<Partition> candidate_set(candidates.begin(), candidates.end());
    std::set<Partition> beyond_set;
    for (const Partition& mu : candidates)
        for (const Partition& ext : one_box_extensions(mu))
            if (!candidate_set.count(ext)) beyond_set.insert(ext);
    const std::vector<Partition> beyond(beyond_set.begin(), beyond_set.end());

    std::vector<std::vector<long long>> oracle_profiles(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t idx) {
        oracle_profiles[idx] = tor_orbit_profile_bruteforce(I, candidates[idx], field);
    });

    std::vector<long long> beyond_totals(beyond.size(), 0);
    parallel_for(beyond.size(), threads, [&](std::size_t idx) {
        for (long long d : tor_orbit_profile_bruteforce(I, beyond[idx], field))
            beyond_totals[idx] += d;
    });

    VerifyOutcome out;
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        const Partition& mu = candidates[idx];
        // One index past the top detects phantom high Tor on either side.
        for (int i = 0; i <= n; ++i) {
            OrbitCheck ch;
            ch.i = i;
            ch.mu = mu;
            ch.formula = tor.orbit_dim(i, mu);
            ch.oracle = i < static_cast<int>(oracle_profiles[idx].size())
                            ? oracle_profiles[idx][static_cast<size_t>(i)]
                            : 0;
            ch.pass = ch.formula == ch.oracle;
            if (!ch.pass) out.pass = false;
            out.orbit.push_back(std::move(ch));
        }
    }
    for (size_t idx = 0; idx < beyond.size(); ++idx) {
        BeyondCheck ch;
        ch.mu = beyond[idx];
        ch.oracle_total = beyond_totals[idx];
        ch.pass = ch.oracle_total == 0;
        if (!ch.pass) out.pass = false;
        out.beyond.push_back(std::move(ch));
    }
    return out;
}

} // namespace symtor
