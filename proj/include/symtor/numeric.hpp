#pragma once

#include <cstdint>
#include <stdexcept>

namespace symtor {

// Exact 64-bit arithmetic helpers.  Everything in this library is integer
// arithmetic; any overflow is a hard error, never a silent wrap.

inline long long checked_mul(long long a, long long b) {
    __int128 t = static_cast<__int128>(a) * b;
    if (t > INT64_MAX || t < INT64_MIN)
        throw std::overflow_error("integer overflow in multiplication");
    return static_cast<long long>(t);
}

inline long long checked_add(long long a, long long b) {
    __int128 t = static_cast<__int128>(a) + b;
    if (t > INT64_MAX || t < INT64_MIN)
        throw std::overflow_error("integer overflow in addition");
    return static_cast<long long>(t);
}

// binomial(n, k), exact; 0 when k < 0 or k > n.
inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        __int128 t = static_cast<__int128>(r) * (n - k + i);
        t /= i; // divides exactly: r*(n-k+1)...(n-k+i) is i! * C(n-k+i, i)
        if (t > INT64_MAX) throw std::overflow_error("binomial overflow");
        r = static_cast<long long>(t);
    }
    return r;
}

// multinomial(sum; parts) = (sum)! / prod(parts!) via iterated binomials.
template <typename It>
long long multinomial(It first, It last) {
    long long total = 0;
    long long r = 1;
    for (It it = first; it != last; ++it) {
        if (*it < 0) throw std::invalid_argument("negative multinomial part");
        total += *it;
        r = checked_mul(r, binomial(total, *it));
    }
    return r;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace symtor
