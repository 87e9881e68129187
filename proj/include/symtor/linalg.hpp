#pragma once

#include <vector>

#include "symtor/field.hpp"

namespace symtor {

// Dense integer matrix, row-major.  Boundary matrices have entries in
// {-1,0,+1}; intermediate Bareiss entries are minors of those.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Exact rank over the rationals via fraction-free (Bareiss) elimination with
// full pivoting.  Throws std::overflow_error if a minor leaves 64 bits.
int rank_char0(IntMatrix m);

// Rank over F_p, p prime.
int rank_mod_p(IntMatrix m, long long p);

int rank_over(const IntMatrix& m, const FieldSpec& field);

} // namespace symtor
