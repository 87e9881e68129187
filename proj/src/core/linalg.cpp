#include "symtor/linalg.hpp"

#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace symtor {

namespace {

void swap_rows(IntMatrix& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(IntMatrix& m, int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % p);
        b = static_cast<long long>(static_cast<__int128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

} // namespace

int rank_char0(IntMatrix m) {
    int r = 0;
    long long prev = 1;
    while (r < m.rows && r < m.cols) {
        // Full pivoting on the smallest nonzero magnitude keeps the exact
        // minors from growing faster than necessary.
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = r; i < m.rows; ++i)
            for (int j = r; j < m.cols; ++j) {
                long long v = m.at(i, j);
                if (v == 0) continue;
                long long av = v < 0 ? -v : v;
                if (pi < 0 || av < best) {
                    pi = i;
                    pj = j;
                    best = av;
                }
            }
        if (pi < 0) break;
        swap_rows(m, r, pi);
        swap_cols(m, r, pj);
        const long long piv = m.at(r, r);
        for (int i = r + 1; i < m.rows; ++i) {
            const long long mir = m.at(i, r);
            for (int j = r + 1; j < m.cols; ++j) {
                __int128 t = static_cast<__int128>(m.at(i, j)) * piv -
                             static_cast<__int128>(mir) * m.at(r, j);
                // Bareiss: every intermediate entry is a minor of the input,
                // so this division is exact.
                t /= prev;
                if (t > INT64_MAX || t < INT64_MIN)
                    throw std::overflow_error("rank_char0: minor exceeds 64 bits");
                m.at(i, j) = static_cast<long long>(t);
            }
            m.at(i, r) = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

int rank_mod_p(IntMatrix m, long long p) {
    for (long long& v : m.a) {
        v %= p;
        if (v < 0) v += p;
    }
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        swap_rows(m, r, pivot_row);
        const long long inv = mod_pow(m.at(r, c), p - 2, p);
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            const long long f =
                static_cast<long long>(static_cast<__int128>(m.at(i, c)) * inv % p);
            for (int j = c; j < m.cols; ++j) {
                long long v = m.at(i, j) -
                              static_cast<long long>(static_cast<__int128>(f) * m.at(r, j) % p);
                if (v < 0) v += p;
                m.at(i, j) = v;
            }
        }
        ++r;
    }
    return r;
}

int rank_over(const IntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return field.characteristic == 0 ? rank_char0(m)
                                     : rank_mod_p(m, field.characteristic);
}

} // namespace symtor
