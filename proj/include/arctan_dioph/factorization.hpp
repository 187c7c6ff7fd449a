#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arctan_dioph/natural.hpp"
#include "arctan_dioph/primality.hpp"

namespace arctan_dioph {

// Budget for the factoring stage; rho gives up cleanly instead of hanging.
struct EffortLimits {
    std::uint64_t max_iterations = 100'000'000;
    std::chrono::milliseconds time_budget{30'000};
};

// n = product of prime^exponent, primes strictly increasing.
struct Factorization {
    Natural n;
    std::vector<std::pair<Natural, unsigned>> factors;
};

class FactorizationIncomplete : public std::runtime_error {
public:
    FactorizationIncomplete(Factorization partial, Natural cofactor)
        : std::runtime_error("factorization incomplete: unfactored cofactor " +
                             cofactor.str()),
          partial_(std::move(partial)),
          cofactor_(std::move(cofactor)) {}

    const Factorization& partial() const { return partial_; }
    const Natural& cofactor() const { return cofactor_; }

private:
    Factorization partial_;
    Natural cofactor_;
};

namespace detail {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

class EffortClock {
public:
    explicit EffortClock(const EffortLimits& limits)
        : limits_(limits), start_(std::chrono::steady_clock::now()) {}

    // Charges `cost` iterations; true while within budget.
    bool spend(std::uint64_t cost) {
        iterations_ += cost;
        if (iterations_ > limits_.max_iterations) return false;
        return std::chrono::steady_clock::now() - start_ <= limits_.time_budget;
    }

private:
    const EffortLimits& limits_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t iterations_ = 0;
};

// Brent's variant of Pollard rho. Returns a nontrivial factor of n, or 0 if
// the effort budget ran out. Requires n odd, composite, not a perfect power
// of a found prime (any composite works, convergence just varies).
inline Natural pollard_rho_brent(const Natural& n, EffortClock& clock) {
    if (n % 2 == 0) return 2;
    for (Natural c = 1; ; ++c) {
        Natural x = 2, y = 2, d = 1;
        Natural ys = y, q = 1;
        std::uint64_t r = 1;
        const std::uint64_t batch = 128;
        while (d == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            for (std::uint64_t j = 0; j < r && d == 1; j += batch) {
                ys = y;
                const std::uint64_t steps = std::min(batch, r - j);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    Natural diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                }
                if (!clock.spend(steps)) return 0;
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time to recover the factor.
            do {
                ys = (ys * ys + c) % n;
                Natural diff = x > ys ? x - ys : ys - x;
                d = gcd(diff, n);
                if (!clock.spend(1)) return 0;
            } while (d == 1);
        }
        if (d != n) return d;
        // Cycle degenerated for this c; retry with the next constant.
    }
}

}  // namespace detail

// Complete canonical factorization of n >= 1. Trial division up to 10^6,
// then Brent-Pollard rho on remaining composite cofactors; every emitted
// prime is certified by is_probable_prime.
inline Factorization factorize(const Natural& n,
                               const EffortLimits& limits = {}) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");

    Factorization result;
    result.n = n;
    Natural m = n;

    auto emit = [&](const Natural& p, unsigned e) {
        result.factors.emplace_back(p, e);
    };

    // Trial division: 2, 3, then 6k+-1.
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) emit(p, e);
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p <= detail::kTrialDivisionBound && Natural(p) * p <= m;
         p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1 && m <= Natural(detail::kTrialDivisionBound) * detail::kTrialDivisionBound) {
        // Anything left below the bound squared is prime.
        emit(m, 1);
        m = 1;
    }

    if (m > 1) {
        detail::EffortClock clock(limits);
        std::vector<Natural> stack{m};
        std::vector<Natural> primes;
        while (!stack.empty()) {
            Natural c = std::move(stack.back());
            stack.pop_back();
            if (is_probable_prime(c)) {
                primes.push_back(std::move(c));
                continue;
            }
            Natural f = detail::pollard_rho_brent(c, clock);
            if (f == 0) {
                // Budget exhausted: report what we have plus the remainder.
                Natural cofactor = c;
                for (const Natural& s : stack) cofactor *= s;
                Factorization partial = result;
                std::sort(primes.begin(), primes.end());
                for (std::size_t i = 0; i < primes.size();) {
                    std::size_t j = i;
                    while (j < primes.size() && primes[j] == primes[i]) ++j;
                    partial.factors.emplace_back(primes[i],
                                                 static_cast<unsigned>(j - i));
                    i = j;
                }
                std::sort(partial.factors.begin(), partial.factors.end());
                throw FactorizationIncomplete(std::move(partial),
                                              std::move(cofactor));
            }
            stack.push_back(c / f);
            stack.push_back(std::move(f));
        }
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            emit(primes[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }

    std::sort(result.factors.begin(), result.factors.end());
    return result;
}

// Pi (e_i + 1): the number of positive divisors.
inline Natural divisor_count(const Factorization& f) {
    Natural count = 1;
    for (const auto& [p, e] : f.factors) count *= e + 1;
    return count;
}

// All positive divisors in strictly increasing order, by mixed-radix
// expansion over the exponent vector.
inline std::vector<Natural> divisors(const Factorization& f) {
    std::vector<Natural> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        Natural pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arctan_dioph
