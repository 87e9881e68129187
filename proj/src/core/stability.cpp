#include "symtor/stability.hpp"

#include <set>
#include <stdexcept>

#include "symtor/parallel.hpp"

namespace symtor {

namespace {

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

int vec_sum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

// Tor support {(i, mu)} induced by a gamma table: i = profile index + |c|.
std::set<std::pair<int, Partition>> tor_support(const GammaTable& t) {
    std::set<std::pair<int, Partition>> s;
    for (const auto& [key, g] : t.entries())
        s.insert({key.i + vec_sum(key.c), key.mu});
    return s;
}

} // namespace

void GammaTable::set(GammaKey key, long long value) {
    if (value <= 0) throw std::invalid_argument("GammaTable: value must be positive");
    if (key.mu.length() != n_)
        throw std::invalid_argument("GammaTable: partition length mismatch");
    if (!entries_.emplace(std::move(key), value).second)
        throw std::invalid_argument("GammaTable: duplicate key");
}

long long GammaTable::at(const GammaKey& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
}

GammaTable base_gamma_table(const SymIdeal& I, const FieldSpec& field, int threads) {
    if (I.is_zero())
        throw std::invalid_argument("base_gamma_table: zero ideal");
    const std::vector<Partition> candidates = candidate_partitions(I);
    std::vector<std::vector<std::pair<GammaKey, long long>>> results(candidates.size());

    parallel_for(candidates.size(), threads, [&](std::size_t idx) {
        const Partition& mu = candidates[idx];
        const std::vector<int> p = p_vector(mu);
        std::vector<int> c(p.size(), 0);
        do {
            const HomologyProfile prof = gamma(I, mu, c, field);
            for (int i = 0; i <= prof.max_index(); ++i)
                if (prof[i] > 0)
                    results[idx].push_back({GammaKey{mu, c, i}, prof[i]});
        } while (next_vector(c, p));
    });

    GammaTable table(I.var_count(), field);
    for (auto& rows : results)
        for (auto& [key, g] : rows) table.set(std::move(key), g);
    return table;
}

GammaTable propagate(const GammaTable& table, int m) {
    if (m < table.var_count())
        throw std::invalid_argument("propagate: m below the table's variable count");
    GammaTable cur = table;
    for (int n = table.var_count(); n < m; ++n) {
        GammaTable next(n + 1, table.field());
        for (const auto& [key, g] : cur.entries()) {
            next.set(GammaKey{key.mu.appended(0), key.c, key.i}, g);
            const int last = key.mu[key.mu.length() - 1];
            if (last > 0) {
                std::vector<int> c = key.c;
                c.back() += 1; // the repeated value extends the final block
                next.set(GammaKey{key.mu.appended(last), std::move(c), key.i}, g);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool nonvanishing_check(const GammaTable& level_n, const GammaTable& level_n1) {
    if (level_n1.var_count() != level_n.var_count() + 1)
        throw std::invalid_argument("nonvanishing_check: levels not consecutive");
    if (!(level_n.field() == level_n1.field()))
        throw std::invalid_argument("nonvanishing_check: field mismatch");

    const auto sup_n = tor_support(level_n);
    const auto sup_n1 = tor_support(level_n1);

    // Clause (ii): a strictly intermediate appended value never supports Tor.
    for (const auto& [i, mu] : sup_n1) {
        const int last = mu[mu.length() - 1];
        const int prev = mu[mu.length() - 2];
        if (last > 0 && last < prev) return false;
    }

    // Clause (i): appended zero preserves the homological index, both ways.
    for (const auto& [i, mu] : sup_n)
        if (!sup_n1.count({i, mu.appended(0)})) return false;
    for (const auto& [i, mu] : sup_n1) {
        if (mu[mu.length() - 1] != 0) continue;
        if (!sup_n.count({i, Partition(std::vector<int>(
                                 mu.parts().begin(), mu.parts().end() - 1))}))
            return false;
    }

    // Clause (iii): an appended repeat of a positive last entry shifts the
    // index by one, both ways.  (A repeated zero belongs to clause (i).)
    for (const auto& [i, mu] : sup_n) {
        const int last = mu[mu.length() - 1];
        if (last > 0 && !sup_n1.count({i + 1, mu.appended(last)})) return false;
    }
    for (const auto& [i, mu] : sup_n1) {
        const int last = mu[mu.length() - 1];
        const int prev = mu[mu.length() - 2];
        if (last == 0 || last != prev) continue;
        if (!sup_n.count({i - 1, Partition(std::vector<int>(
                                     mu.parts().begin(), mu.parts().end() - 1))}))
            return false;
    }
    return true;
}

EquivariantTor tor_from_gamma(const GammaTable& table) {
    EquivariantTor tor(table.var_count(), table.field());
    for (const auto& [key, g] : table.entries())
        tor.add_block(key.i + vec_sum(key.c), key.mu,
                      TorBlock{block_for(key.mu, key.c), g, key.c});
    return tor;
}

BettiTable betti_from_gamma(const GammaTable& table) {
    return graded_betti(tor_from_gamma(table));
}

} // namespace symtor
