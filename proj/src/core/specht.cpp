#include "symtor/specht.hpp"

#include <stdexcept>

#include "symtor/numeric.hpp"

namespace symtor {

BlockSignature::BlockSignature(std::vector<Hook> hooks) : hooks_(std::move(hooks)) {
    for (const Hook& h : hooks_) {
        if (h.arm < 1) throw std::invalid_argument("hook arm must be >= 1");
        if (h.leg < 0) throw std::invalid_argument("hook leg must be >= 0");
    }
}

int BlockSignature::total() const {
    int n = 0;
    for (const Hook& h : hooks_) n += h.boxes();
    return n;
}

long long hook_dim(const Hook& h) {
    if (h.arm < 1 || h.leg < 0) throw std::invalid_argument("hook_dim: bad hook");
    return binomial(h.arm + h.leg - 1, h.leg);
}

BlockSignature block_for(const Partition& mu, const std::vector<int>& c) {
    const ShapeData sd = shape_data(mu);
    if (static_cast<int>(c.size()) != sd.s())
        throw std::invalid_argument("block_for: c has wrong length");
    std::vector<Hook> hooks;
    hooks.reserve(c.size() + 1);
    for (int k = 0; k < sd.s(); ++k) {
        const int ck = c[static_cast<size_t>(k)];
        const int pk = sd.mults[static_cast<size_t>(k)];
        if (ck < 0 || ck > pk - 1)
            throw std::invalid_argument("block_for: c out of range");
        hooks.push_back(Hook{pk - ck, ck});
    }
    if (sd.zero_count > 0) hooks.push_back(Hook{sd.zero_count, 0});
    return BlockSignature(std::move(hooks));
}

long long block_dim(const BlockSignature& pi) {
    std::vector<int> sizes;
    sizes.reserve(pi.hooks().size());
    long long factors = 1;
    for (const Hook& h : pi.hooks()) {
        sizes.push_back(h.boxes());
        factors = checked_mul(factors, hook_dim(h));
    }
    return checked_mul(multinomial(sizes.begin(), sizes.end()), factors);
}

int trivial_multiplicity(const BlockSignature& pi) {
    for (const Hook& h : pi.hooks())
        if (h.leg != 0) return 0;
    return 1;
}

} // namespace symtor
