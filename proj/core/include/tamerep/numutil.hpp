#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tamerep/common.hpp"

// Small exact-integer helpers shared by every module.  Everything here works
// on values that fit comfortably in 64 bits; callers enforce desk-scale
// bounds before getting anywhere near overflow.

namespace tamerep::num {

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (r > (std::int64_t{1} << 62) / base) fail(ErrorKind::TooLarge, "integer power overflow");
        r *= base;
    }
    return r;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    if (mod == 1) return 0;
    std::int64_t r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % mod);
        base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Multiplicative order of x modulo n.  ord(x mod 1) is 1 by convention.
inline std::int64_t mult_order_mod(std::int64_t x, std::int64_t n) {
    if (n <= 0) fail(ErrorKind::Parameter, "mult_order_mod: modulus must be positive");
    if (n == 1) return 1;
    x %= n;
    if (x < 0) x += n;
    if (gcd(x, n) != 1) fail(ErrorKind::Parameter, "mult_order_mod: x not a unit");
    // Euler phi bound, then strip primes from a multiple of the order.
    std::int64_t phi = 1;
    {
        std::int64_t m = n;
        for (std::int64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                std::int64_t pk = 1;
                while (m % d == 0) { m /= d; pk *= d; }
                phi *= pk - pk / d;
            }
        }
        if (m > 1) phi *= m - 1;
    }
    std::int64_t ord = phi;
    for (std::int64_t ell : prime_factors(phi)) {
        while (ord % ell == 0 && mod_pow(x, ord / ell, n) == 1) ord /= ell;
    }
    return ord;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    std::int64_t t = 0, nt = 1, r = n, nr = a % n;
    if (nr < 0) nr += n;
    while (nr != 0) {
        std::int64_t qt = r / nr;
        std::int64_t tmp = t - qt * nt; t = nt; nt = tmp;
        tmp = r - qt * nr; r = nr; nr = tmp;
    }
    if (r != 1) fail(ErrorKind::Parameter, "mod_inverse: not invertible");
    return t < 0 ? t + n : t;
}

// Largest divisor of n coprime to p.
inline std::int64_t prime_to_p_part(std::int64_t n, std::int64_t p) {
    while (n % p == 0) n /= p;
    return n;
}

// Moebius function, used by the irreducible-polynomial counting oracle.
inline int moebius(std::int64_t n) {
    int mu = 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tamerep::num
