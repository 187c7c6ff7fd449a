#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arctan_dioph/factorization.hpp"
#include "arctan_dioph/natural.hpp"
#include "arctan_dioph/primality.hpp"

namespace arctan_dioph {

class InvalidK : public std::invalid_argument {
public:
    InvalidK() : std::invalid_argument("k must be a positive integer") {}
};

class InvalidL : public std::invalid_argument {
public:
    InvalidL() : std::invalid_argument("l must be a positive integer") {}
};

// The divisor parametrization is only valid under gcd(l, k^2+1) = 1;
// outside that hypothesis we refuse rather than emit unsound output.
class NotCoprime : public std::invalid_argument {
public:
    explicit NotCoprime(Natural g)
        : std::invalid_argument("gcd(l, k^2+1) = " + g.str() + ", expected 1"),
          gcd_(std::move(g)) {}
    const Natural& gcd() const { return gcd_; }

private:
    Natural gcd_;
};

class NotADivisor : public std::invalid_argument {
public:
    NotADivisor(const Natural& d, const Natural& n)
        : std::invalid_argument("d = " + d.str() + " does not divide " +
                                n.str()) {}
};

class NotPrimeCase : public std::domain_error {
public:
    NotPrimeCase() : std::domain_error("k^2+1 is not prime") {}
};

class NotSemiprimeCase : public std::domain_error {
public:
    NotSemiprimeCase()
        : std::domain_error("k^2+1 is not a product of two distinct primes") {}
};

// Validated (k, l) with n = k^2+1 cached and gcd(l, n) = 1 established.
struct ProblemInstance {
    Natural k;
    Natural l;
    Natural n;
};

inline ProblemInstance make_instance(const Natural& k, const Natural& l) {
    if (k < 1) throw InvalidK();
    if (l < 1) throw InvalidL();
    Natural n = k * k + 1;
    Natural g = gcd(l, n);
    if (g != 1) throw NotCoprime(std::move(g));
    return ProblemInstance{k, l, std::move(n)};
}

// One solution (x, y) = (k + l*(n/d), k*l + d) for a divisor d of n = k^2+1.
// v = n/d is the cofactor.
struct Solution {
    Natural d;
    Natural x;
    Natural y;
    Natural v;

    friend bool operator==(const Solution&, const Solution&) = default;
};

struct SolutionSet {
    ProblemInstance instance;
    std::vector<Solution> solutions;  // ascending by d

    std::size_t count() const { return solutions.size(); }
};

inline Solution solution_for_divisor(const ProblemInstance& inst,
                                     const Natural& d) {
    if (d < 1 || inst.n % d != 0) throw NotADivisor(d, inst.n);
    Natural v = inst.n / d;
    Solution s{d, inst.k + inst.l * v, inst.k * inst.l + d, std::move(v)};
    // gcd(l, y) = 1 holds whenever gcd(l, n) = 1; a failure here is a bug.
    if (gcd(inst.l, s.y) != 1)
        throw std::logic_error("solution_for_divisor: gcd(l, y) != 1");
    return s;
}

// The complete solution set, one solution per divisor of k^2+1, ascending d.
inline SolutionSet solve_all(const ProblemInstance& inst,
                             const EffortLimits& limits = {}) {
    SolutionSet set{inst, {}};
    for (const Natural& d : divisors(factorize(inst.n, limits)))
        set.solutions.push_back(solution_for_divisor(inst, d));
    return set;
}

// k^2+1 = p prime: exactly the two solutions for d = 1 and d = p, produced
// without general factorization.
inline SolutionSet prime_case_solutions(const ProblemInstance& inst) {
    if (!is_probable_prime(inst.n)) throw NotPrimeCase();
    SolutionSet set{inst, {}};
    set.solutions.push_back(solution_for_divisor(inst, 1));
    set.solutions.push_back(solution_for_divisor(inst, inst.n));
    return set;
}

// k^2+1 = p1*p2 with p1 != p2 prime: exactly four solutions.
inline SolutionSet semiprime_case_solutions(const ProblemInstance& inst,
                                            const EffortLimits& limits = {}) {
    if (is_probable_prime(inst.n)) throw NotSemiprimeCase();
    Factorization f = factorize(inst.n, limits);
    if (f.factors.size() != 2 || f.factors[0].second != 1 ||
        f.factors[1].second != 1)
        throw NotSemiprimeCase();
    SolutionSet set{inst, {}};
    set.solutions.push_back(solution_for_divisor(inst, 1));
    set.solutions.push_back(solution_for_divisor(inst, f.factors[0].first));
    set.solutions.push_back(solution_for_divisor(inst, f.factors[1].first));
    set.solutions.push_back(solution_for_divisor(inst, inst.n));
    return set;
}

}  // namespace arctan_dioph
