// Arithmetic in the prime field F_p. Elements are canonical residues held in
// uint64_t; p is restricted to < 2^31 so products never overflow a 64-bit
// accumulator and no Montgomery/Barrett machinery is needed.

#ifndef LYUCALC_FP_HPP
#define LYUCALC_FP_HPP

#include <cassert>
#include <cstdint>

#include "lyucalc/error.hpp"

namespace lyu {

using u64 = std::uint64_t;

constexpr u64 kMaxPrime = (u64(1) << 31) - 1;

inline u64 fp_add(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 fp_sub(u64 a, u64 b, u64 p) {
    return a >= b ? a - b : a + p - b;
}

inline u64 fp_neg(u64 a, u64 p) {
    return a == 0 ? 0 : p - a;
}

inline u64 fp_mul(u64 a, u64 b, u64 p) {
    assert(a < p && b < p && p <= kMaxPrime);
    return a * b % p;
}

inline u64 fp_pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

// inverse via Fermat; p must be prime and a nonzero
inline u64 fp_inv(u64 a, u64 p) {
    assert(a % p != 0);
    return fp_pow(a, p - 2, p);
}

// reduce an arbitrary signed integer string of digits elsewhere; here just a
// helper for reducing possibly-large host integers
inline u64 fp_reduce(long long v, u64 p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<u64>(m);
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(u64 p) {
    if (p < 2 || p > kMaxPrime || !is_prime_u64(p))
        throw Error("characteristic must be a prime < 2^31, got " + std::to_string(p));
}

} // namespace lyu

#endif
