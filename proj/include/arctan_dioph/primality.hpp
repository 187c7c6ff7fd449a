#pragma once

#include <array>
#include <cstdint>

#include "arctan_dioph/natural.hpp"

namespace arctan_dioph {

namespace detail {

// One Miller-Rabin round: true if `a` witnesses that n is composite.
// Requires n odd, n > 2, n - 1 = q * 2^s with q odd.
inline bool mr_composite_witness(const Natural& n, const Natural& a,
                                 const Natural& q, unsigned s) {
    Natural base = a % n;
    if (base == 0) return false;
    Natural x = boost::multiprecision::powm(base, q, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace detail

// Primality test. Deterministic for n < 2^64 (fixed witness set
// {2,...,37}); Miller-Rabin with `rounds` prime bases above that,
// error probability at most 4^-rounds.
inline bool is_probable_prime(const Natural& n, unsigned rounds = 40) {
    static constexpr std::array<unsigned, 12> small_primes = {
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (unsigned p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }

    Natural q = n - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }

    static const Natural two_pow_64 = Natural(1) << 64;
    if (n < two_pow_64) {
        for (unsigned a : small_primes)
            if (detail::mr_composite_witness(n, a, q, s)) return false;
        return true;
    }

    // Fixed prime bases keep the test deterministic run-to-run.
    unsigned done = 0;
    for (std::uint64_t a = 2; done < rounds; ++a) {
        if (!is_probable_prime(Natural(a))) continue;
        if (detail::mr_composite_witness(n, a, q, s)) return false;
        ++done;
    }
    return true;
}

}  // namespace arctan_dioph
