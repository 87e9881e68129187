#include "symtor/ideals.hpp"

#include <algorithm>

namespace symtor {

namespace {

// Keep only elements that dominate no other element (antichain of minima).
template <typename T, typename Leq>
std::vector<T> minimalize(std::vector<T> items, Leq leq) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    std::vector<T> out;
    for (const T& x : items) {
        bool redundant = false;
        for (const T& y : items) {
            if (x == y) continue;
            if (leq(y, x)) { // y <= x, so x is redundant
                // Equal elements were deduped, so ties cannot double-drop.
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(x);
    }
    return out;
}

} // namespace

SymIdeal::SymIdeal(int n, std::vector<Partition> generators) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymIdeal: n must be >= 1");
    for (const Partition& g : generators)
        if (g.length() != n)
            throw std::invalid_argument("SymIdeal: generator length mismatch");
    min_gens_ = minimalize(std::move(generators), [](const Partition& a, const Partition& b) {
        return dominates(b, a);
    });
}

bool SymIdeal::contains(const Partition& lambda) const {
    if (lambda.length() != n_)
        throw std::invalid_argument("SymIdeal::contains: length mismatch");
    for (const Partition& g : min_gens_)
        if (dominates(lambda, g)) return true;
    return false;
}

bool SymIdeal::contains_multidegree(const Multidegree& a) const {
    if (static_cast<int>(a.size()) != n_)
        throw std::invalid_argument("SymIdeal::contains_multidegree: length mismatch");
    return contains(part_of(a));
}

int SymIdeal::max_generator_entry() const {
    int m = 0;
    for (const Partition& g : min_gens_)
        if (g.length() > 0) m = std::max(m, g[0]);
    return m;
}

PlainIdeal::PlainIdeal(int n, std::vector<Multidegree> generators) : n_(n) {
    if (n < 1) throw std::invalid_argument("PlainIdeal: n must be >= 1");
    for (const Multidegree& g : generators) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("PlainIdeal: generator length mismatch");
        for (int v : g)
            if (v < 0) throw std::invalid_argument("PlainIdeal: negative exponent");
    }
    gens_ = minimalize(std::move(generators), [](const Multidegree& a, const Multidegree& b) {
        return dominates(b, a);
    });
}

bool PlainIdeal::is_unit() const {
    return gens_.size() == 1 &&
           std::all_of(gens_.front().begin(), gens_.front().end(),
                       [](int v) { return v == 0; });
}

bool PlainIdeal::contains(const Multidegree& a) const {
    if (static_cast<int>(a.size()) != n_)
        throw std::invalid_argument("PlainIdeal::contains: length mismatch");
    for (const Multidegree& g : gens_)
        if (dominates(a, g)) return true;
    return false;
}

PlainIdeal unsymmetrize(int n, const std::vector<Partition>& generators) {
    std::vector<Multidegree> gens;
    gens.reserve(generators.size());
    for (const Partition& g : generators) gens.push_back(g.parts());
    return PlainIdeal(n, std::move(gens));
}

} // namespace symtor
