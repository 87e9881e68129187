#include "symtor/duality.hpp"

#include <algorithm>
#include <functional>

#include "symtor/numeric.hpp"

namespace symtor {

namespace {

// All weakly decreasing length-n tuples over the chain 0 < 1 < ... < D-1 < inf.
void enumerate_extended(int n, int D, const std::function<void(const ExtendedPartition&)>& emit) {
    std::vector<ExtEntry> cur;
    cur.reserve(static_cast<size_t>(n));
    // level encoding: 0..D-1 finite, D = infinity
    std::function<void(int, int)> rec = [&](int idx, int max_level) {
        if (idx == n) {
            emit(ExtendedPartition(cur));
            return;
        }
        for (int lvl = max_level; lvl >= 0; --lvl) {
            cur.push_back(lvl == D ? ExtEntry::infinity() : ExtEntry::finite(lvl));
            rec(idx + 1, lvl);
            cur.pop_back();
        }
    };
    rec(0, D);
}

bool in_complement_cover(const SymIdeal& I, const ExtendedPartition& mu, int D) {
    return !I.contains(cap(mu, D));
}

// The covers of mu inside the weakly decreasing tuples over {0..D-1, inf}:
// step the head entry of one equal-value block to the next chain value.
std::vector<ExtendedPartition> cover_steps(const ExtendedPartition& mu, int D) {
    std::vector<ExtendedPartition> out;
    const int n = mu.length();
    for (int j = 0; j < n; ++j) {
        if (j > 0 && mu[j] == mu[j - 1]) continue; // not a block head
        if (mu[j].is_infinite()) continue;         // nothing above infinity
        std::vector<ExtEntry> e = mu.entries();
        const int v = mu[j].value();
        e[static_cast<size_t>(j)] = (v == D - 1) ? ExtEntry::infinity() : ExtEntry::finite(v + 1);
        // Stepping a block head keeps the tuple weakly decreasing: the entry
        // above is strictly larger, and only infinity exceeds D-1.
        out.push_back(ExtendedPartition(std::move(e)));
    }
    return out;
}

} // namespace

DualGeneratorSet dual_generators(const SymIdeal& I, int cap_override) {
    if (I.is_zero())
        throw std::invalid_argument(
            "dual_generators: the zero ideal has no dual generators "
            "(its complement cover would be the all-infinite tuple)");
    const int n = I.var_count();
    const int min_cap = I.max_generator_entry() + 1;
    if (cap_override != 0 && cap_override < min_cap)
        throw std::invalid_argument("dual_generators: cap below 1 + max generator entry");
    const int D = cap_override == 0 ? min_cap : cap_override;

    DualGeneratorSet out;
    out.cap_value = D;
    enumerate_extended(n, D, [&](const ExtendedPartition& mu) {
        if (!in_complement_cover(I, mu, D)) return;
        for (const ExtendedPartition& up : cover_steps(mu, D))
            if (in_complement_cover(I, up, D)) return; // not maximal
        out.all.push_back(mu);
    });
    std::sort(out.all.begin(), out.all.end());

    for (const ExtendedPartition& mu : out.all) {
        bool top = true;
        for (const ExtendedPartition& rho : out.all) {
            if (mu == rho) continue;
            if (preceq(mu, rho)) {
                top = false;
                break;
            }
        }
        if (top) out.maximal.push_back(mu);
    }
    return out;
}

bool preceq(const ExtendedPartition& mu, const ExtendedPartition& rho) {
    if (mu.all_infinite() || rho.all_infinite())
        throw std::invalid_argument("preceq: needs a finite entry on both sides");
    return dominates(tilde(rho), tilde(mu)) && plus(mu).size() <= plus(rho).size();
}

std::vector<ExtendedPartition> maximal_dual_generators(const SymIdeal& I) {
    return dual_generators(I).maximal;
}

std::vector<ExtremalPair> extremal_report(const SymIdeal& I) {
    std::vector<ExtremalPair> pairs;
    for (const ExtendedPartition& rho : maximal_dual_generators(I)) {
        const ExtShape es = ext_shape(rho);
        const int p0 = es.inf_count;
        const int p1 = es.mults.front(); // rho has a finite entry
        ExtremalPair pr;
        pr.index = I.var_count() - p0;
        pr.degree = tilde(rho);
        pr.value = binomial(p0 + p1 - 1, p0);
        pairs.push_back(std::move(pr));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

int regularity_quotient(const SymIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw std::invalid_argument("regularity_quotient: undefined for the zero/unit ideal");
    long long best = -1;
    for (const ExtendedPartition& mu : dual_generators(I).all)
        best = std::max(best, plus(mu).size());
    return static_cast<int>(best);
}

int projective_dimension_quotient(const SymIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw std::invalid_argument(
            "projective_dimension_quotient: undefined for the zero/unit ideal");
    int best = -1;
    for (const ExtendedPartition& mu : dual_generators(I).all)
        best = std::max(best, I.var_count() - ell(mu));
    return best;
}

} // namespace symtor
