#include "symtor/partitions.hpp"

#include <algorithm>
#include <functional>

#include "symtor/numeric.hpp"

namespace symtor {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition entries must be >= 0");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition must be weakly decreasing");
    }
}

long long Partition::size() const {
    long long t = 0;
    for (int v : parts_) t += v;
    return t;
}

bool Partition::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int v) { return v == 0; });
}

Partition Partition::padded(int n) const {
    if (n < length()) throw std::invalid_argument("padded: n smaller than length");
    std::vector<int> p = parts_;
    p.resize(static_cast<size_t>(n), 0);
    return Partition(std::move(p));
}

Partition Partition::appended(int v) const {
    if (!parts_.empty() && v > parts_.back())
        throw std::invalid_argument("appended entry breaks weak decrease");
    std::vector<int> p = parts_;
    p.push_back(v);
    return Partition(std::move(p));
}

Partition part_of(const Multidegree& a) {
    std::vector<int> p = a;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: length mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

ShapeData shape_data(const Partition& mu) {
    ShapeData sd;
    int i = 0;
    const int n = mu.length();
    while (i < n && mu[i] > 0) {
        int j = i;
        while (j < n && mu[j] == mu[i]) ++j;
        sd.values.push_back(mu[i]);
        sd.mults.push_back(j - i);
        i = j;
    }
    sd.zero_count = n - i;
    return sd;
}

std::vector<int> p_vector(const Partition& mu) {
    ShapeData sd = shape_data(mu);
    std::vector<int> p(sd.mults.size());
    for (size_t k = 0; k < p.size(); ++k) p[k] = sd.mults[k] - 1;
    return p;
}

Partition remove_columns(const Partition& mu, const std::vector<int>& c) {
    ShapeData sd = shape_data(mu);
    if (static_cast<int>(c.size()) != sd.s())
        throw std::invalid_argument("remove_columns: c has wrong length");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(mu.length()));
    for (int k = 0; k < sd.s(); ++k) {
        if (c[static_cast<size_t>(k)] < 0 || c[static_cast<size_t>(k)] > sd.mults[static_cast<size_t>(k)])
            throw std::invalid_argument("remove_columns: c out of range");
        int keep = sd.mults[static_cast<size_t>(k)] - c[static_cast<size_t>(k)];
        out.insert(out.end(), static_cast<size_t>(keep), sd.values[static_cast<size_t>(k)]);
        out.insert(out.end(), static_cast<size_t>(c[static_cast<size_t>(k)]),
                   sd.values[static_cast<size_t>(k)] - 1);
    }
    out.insert(out.end(), static_cast<size_t>(sd.zero_count), 0);
    // d_k - 1 >= d_{k+1} since the d's are strictly decreasing, so the
    // concatenation is already weakly decreasing.
    return Partition(std::move(out));
}

long long rearrangement_count(const Partition& mu) {
    ShapeData sd = shape_data(mu);
    std::vector<int> mults = sd.mults;
    mults.push_back(sd.zero_count);
    return multinomial(mults.begin(), mults.end());
}

ExtendedPartition::ExtendedPartition(std::vector<ExtEntry> entries)
    : entries_(std::move(entries)) {
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] < entries_[i])
            throw std::invalid_argument("extended partition must be weakly decreasing");
}

ExtendedPartition ExtendedPartition::from_ints_with_inf(const std::vector<int>& v) {
    std::vector<ExtEntry> e;
    e.reserve(v.size());
    for (int x : v) e.push_back(x < 0 ? ExtEntry::infinity() : ExtEntry::finite(x));
    return ExtendedPartition(std::move(e));
}

bool ExtendedPartition::all_infinite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](ExtEntry e) { return e.is_infinite(); });
}

bool ext_leq(const ExtendedPartition& a, const ExtendedPartition& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("ext_leq: length mismatch");
    for (int i = 0; i < a.length(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool ext_dominated_by(const Partition& lambda, const ExtendedPartition& rho) {
    if (lambda.length() != rho.length())
        throw std::invalid_argument("ext_dominated_by: length mismatch");
    for (int i = 0; i < lambda.length(); ++i) {
        if (rho[i].is_infinite()) continue;
        if (lambda[i] > rho[i].value()) return false;
    }
    return true;
}

int ell(const ExtendedPartition& rho) {
    int k = 0;
    for (int i = 0; i < rho.length(); ++i)
        if (rho[i].is_infinite()) ++k;
    return k;
}

ExtShape ext_shape(const ExtendedPartition& rho) {
    ExtShape es;
    int i = 0;
    const int n = rho.length();
    while (i < n && rho[i].is_infinite()) ++i;
    es.inf_count = i;
    while (i < n) {
        int v = rho[i].value();
        int j = i;
        while (j < n && !rho[j].is_infinite() && rho[j].value() == v) ++j;
        es.values.push_back(v);
        es.mults.push_back(j - i);
        i = j;
    }
    return es;
}

Partition tilde(const ExtendedPartition& rho) {
    if (rho.all_infinite())
        throw std::invalid_argument("tilde: no finite entry");
    ExtShape es = ext_shape(rho);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(rho.length()));
    for (size_t k = 0; k < es.values.size(); ++k) {
        int copies = es.mults[k] + (k == 0 ? es.inf_count : 0);
        out.insert(out.end(), static_cast<size_t>(copies), es.values[k] + 1);
    }
    return Partition(std::move(out));
}

Partition plus(const ExtendedPartition& rho) {
    if (rho.all_infinite())
        throw std::invalid_argument("plus: no finite entry");
    ExtShape es = ext_shape(rho);
    const int top = es.values.front() + 1;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(rho.length()));
    for (int i = 0; i < rho.length(); ++i)
        out.push_back(rho[i].is_infinite() ? top : rho[i].value());
    return Partition(std::move(out));
}

Partition cap(const ExtendedPartition& rho, int D) {
    if (D < 1) throw std::invalid_argument("cap: D must be >= 1");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(rho.length()));
    for (int i = 0; i < rho.length(); ++i)
        out.push_back(rho[i].is_infinite() ? D : std::min(rho[i].value(), D));
    return Partition(std::move(out));
}

} // namespace symtor
