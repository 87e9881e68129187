#include "symtor/equivariant.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "symtor/duality.hpp"
#include "symtor/numeric.hpp"
#include "symtor/parallel.hpp"

namespace symtor {

namespace {

// All partitions lambda (same length) with lambda <= bound componentwise.
void partitions_below(const Partition& bound, std::set<Partition>& out) {
    const int n = bound.length();
    std::vector<int> cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int idx, int prev) {
        if (idx == n) {
            out.insert(Partition(cur));
            return;
        }
        const int hi = std::min(prev, bound[idx]);
        for (int v = hi; v >= 0; --v) {
            cur[static_cast<size_t>(idx)] = v;
            rec(idx + 1, v);
        }
    };
    rec(0, bound.length() == 0 ? 0 : bound[0]);
}

// Odometer over 0 <= c <= limit, in lexicographic order.
bool next_vector(std::vector<int>& c, const std::vector<int>& limit) {
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] < limit[k]) {
            ++c[k];
            std::fill(c.begin() + static_cast<long>(k) + 1, c.end(), 0);
            return true;
        }
    }
    return false;
}

} // namespace

void BettiTable::add(int i, long long j, long long value) {
    if (value < 0) throw std::invalid_argument("BettiTable: negative value");
    if (value == 0) return;
    entries_[{i, j}] += value;
}

long long BettiTable::at(int i, long long j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> t(static_cast<size_t>(max_index()) + 1, 0);
    for (const auto& [key, v] : entries_) t[static_cast<size_t>(key.first)] += v;
    return t;
}

int BettiTable::max_index() const {
    int m = -1;
    for (const auto& [key, v] : entries_) m = std::max(m, key.first);
    return m;
}

long long BettiTable::regularity() const {
    long long m = 0;
    for (const auto& [key, v] : entries_) m = std::max(m, key.second - key.first);
    return m;
}

EquivariantTor::EquivariantTor(int n, FieldSpec field) : n_(n), field_(field) {}

bool EquivariantTor::associated_graded_only() const {
    return field_.characteristic > 0 && field_.characteristic <= n_;
}

void EquivariantTor::add_block(int i, const Partition& mu, TorBlock block) {
    if (i < 0 || block.multiplicity <= 0)
        throw std::invalid_argument("EquivariantTor: bad block");
    entries_[{i, mu}].push_back(std::move(block));
}

const std::vector<TorBlock>* EquivariantTor::blocks(int i, const Partition& mu) const {
    const auto it = entries_.find({i, mu});
    return it == entries_.end() ? nullptr : &it->second;
}

long long EquivariantTor::orbit_dim(int i, const Partition& mu) const {
    const std::vector<TorBlock>* bs = blocks(i, mu);
    if (bs == nullptr) return 0;
    long long d = 0;
    for (const TorBlock& b : *bs)
        d = checked_add(d, checked_mul(block_dim(b.sig), b.multiplicity));
    return d;
}

std::vector<Partition> candidate_partitions(const SymIdeal& I) {
    if (I.is_zero())
        throw std::invalid_argument("candidate_partitions: zero ideal");
    std::set<Partition> out;
    if (I.is_unit()) {
        out.insert(Partition(std::vector<int>(static_cast<size_t>(I.var_count()), 0)));
    } else {
        for (const ExtendedPartition& rho : maximal_dual_generators(I))
            partitions_below(tilde(rho), out);
    }
    return std::vector<Partition>(out.begin(), out.end());
}

std::vector<TorBlock> tor_orbit(const SymIdeal& I, int i, const Partition& mu,
                                const FieldSpec& field) {
    std::vector<TorBlock> out;
    const std::vector<int> p = p_vector(mu);
    std::vector<int> c(p.size(), 0);
    do {
        int csum = 0;
        for (int v : c) csum += v;
        if (i - csum < 0) continue;
        const long long g = gamma(I, mu, c, field)[i - csum];
        if (g > 0) out.push_back(TorBlock{block_for(mu, c), g, c});
    } while (next_vector(c, p));
    return out;
}

EquivariantTor equivariant_tor(const SymIdeal& I, const FieldSpec& field, int threads) {
    if (I.is_zero())
        throw std::invalid_argument("equivariant_tor: zero ideal");
    const std::vector<Partition> candidates = candidate_partitions(I);

    struct MuResult {
        std::vector<std::pair<int, TorBlock>> blocks; // (homological index, block)
    };
    std::vector<MuResult> results(candidates.size());

    parallel_for(candidates.size(), threads, [&](std::size_t idx) {
        const Partition& mu = candidates[idx];
        const std::vector<int> p = p_vector(mu);
        std::vector<int> c(p.size(), 0);
        do {
            int csum = 0;
            for (int v : c) csum += v;
            const HomologyProfile prof = gamma(I, mu, c, field);
            for (int j = 0; j <= prof.max_index(); ++j) {
                if (prof[j] == 0) continue;
                results[idx].blocks.push_back(
                    {j + csum, TorBlock{block_for(mu, c), prof[j], c}});
            }
        } while (next_vector(c, p));
    });

    EquivariantTor tor(I.var_count(), field);
    for (size_t idx = 0; idx < candidates.size(); ++idx)
        for (auto& [i, block] : results[idx].blocks)
            tor.add_block(i, candidates[idx], std::move(block));
    return tor;
}

BettiTable graded_betti(const EquivariantTor& tor) {
    BettiTable table;
    for (const auto& [key, blocks] : tor.entries())
        table.add(key.first, key.second.size(), tor.orbit_dim(key.first, key.second));
    return table;
}

long long multigraded_betti(const EquivariantTor& tor, int i, const Multidegree& a) {
    const Partition mu = part_of(a);
    const long long orbit = tor.orbit_dim(i, mu);
    if (orbit == 0) return 0;
    const long long size = rearrangement_count(mu);
    if (orbit % size != 0)
        throw std::logic_error("multigraded_betti: orbit dimension not divisible "
                               "by the orbit size");
    return orbit / size;
}

InvariantBetti invariant_betti(const SymIdeal& I, const FieldSpec& field) {
    InvariantBetti out;
    out.char_warning =
        field.characteristic > 0 && field.characteristic <= I.var_count();
    for (const Partition& mu : candidate_partitions(I)) {
        const std::vector<int> c0(p_vector(mu).size(), 0);
        const HomologyProfile prof = gamma(I, mu, c0, field);
        for (int i = 0; i <= prof.max_index(); ++i)
            if (prof[i] > 0) out.entries[{i, mu}] = prof[i];
    }
    return out;
}

std::map<std::pair<int, Partition>, long long> quotient_tor_orbit_dims(
    const EquivariantTor& tor) {
    std::map<std::pair<int, Partition>, long long> out;
    const Partition zero(std::vector<int>(static_cast<size_t>(tor.var_count()), 0));
    out[{0, zero}] = 1; // Tor_0(R/I) = k in degree 0 for a proper ideal
    for (const auto& [key, blocks] : tor.entries())
        out[{key.first + 1, key.second}] = tor.orbit_dim(key.first, key.second);
    return out;
}

} // namespace symtor
