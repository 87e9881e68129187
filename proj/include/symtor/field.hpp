#pragma once

#include <stdexcept>

#include "symtor/numeric.hpp"

namespace symtor {

// Coefficient field, identified by its characteristic: 0 (rationals) or a
// prime p (the field with p elements).
struct FieldSpec {
    long long characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(long long ch) : characteristic(ch) {
        if (ch != 0 && !is_prime(ch))
            throw std::invalid_argument("characteristic must be 0 or prime");
    }

    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(long long p) { return FieldSpec(p); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

} // namespace symtor
