#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "arctan_dioph/natural.hpp"
#include "arctan_dioph/solver.hpp"

namespace arctan_dioph {

struct SearchBound {
    Natural max_x;
    Natural max_y;
};

enum class VerifyFailure {
    x_out_of_range,   // 1/x outside (0, 1]
    y_out_of_range,   // l/y outside (0, 1)
    k_out_of_range,   // 1/k outside (0, 1]
    sum_not_acute,    // x*y <= l: theta1 + theta2 not below pi/2
    tangent_mismatch  // (y + l*x)/(x*y - l) != 1/k
};

// Exact check of arctan(1/x) + arctan(l/y) = arctan(1/k), all in rational
// arithmetic. holds = domain_ok and tangent equality; never floats.
struct VerificationReport {
    bool holds = false;
    Rational lhs_tangent;  // tan(theta1 + theta2) = (y + l*x)/(x*y - l)
    Rational rhs_tangent;  // 1/k
    bool domain_ok = false;
    std::optional<VerifyFailure> failure_reason;
};

inline VerificationReport verify_exact(const Natural& x, const Natural& y,
                                       const Natural& k, const Natural& l) {
    VerificationReport rep;
    if (k >= 1) rep.rhs_tangent = Rational(1, k);

    // Domain, in order: 0 < 1/x <= 1, 0 < l/y < 1, 0 < 1/k <= 1, and
    // x*y > l so the tangent-sum denominator is positive (the algebraic
    // form of theta1 + theta2 < pi/2).
    if (x < 1) {
        rep.failure_reason = VerifyFailure::x_out_of_range;
        return rep;
    }
    if (y < 1 || y <= l) {
        rep.failure_reason = VerifyFailure::y_out_of_range;
        return rep;
    }
    if (k < 1) {
        rep.failure_reason = VerifyFailure::k_out_of_range;
        return rep;
    }
    if (x * y <= l) {
        rep.failure_reason = VerifyFailure::sum_not_acute;
        return rep;
    }
    rep.domain_ok = true;

    rep.lhs_tangent = Rational(y + l * x, x * y - l);
    if (rep.lhs_tangent != rep.rhs_tangent) {
        rep.failure_reason = VerifyFailure::tangent_mismatch;
        return rep;
    }
    rep.holds = true;
    return rep;
}

// Independent brute-force enumeration of y*(x - k) = l*(1 + k*x) within the
// bound, filtered by gcd(l, y) = 1 unless `filter_coprime` is disabled.
// Iterates x and solves for y by exact divisibility; ascending y.
inline std::vector<std::pair<Natural, Natural>> brute_force_solutions(
    const Natural& k, const Natural& l, const SearchBound& bound,
    bool filter_coprime = true) {
    std::vector<std::pair<Natural, Natural>> out;
    for (Natural x = k + 1; x <= bound.max_x; ++x) {
        Natural rhs = l * (1 + k * x);
        Natural den = x - k;
        if (rhs % den != 0) continue;
        Natural y = rhs / den;
        if (y < 1 || y > bound.max_y) continue;
        if (filter_coprime && gcd(l, y) != 1) continue;
        out.emplace_back(x, std::move(y));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

// Validates the divisor parametrization against the brute-force search over
// the extremal bound max_x = k + l*(k^2+1), max_y = k*l + k^2+1.
inline bool cross_check(const ProblemInstance& inst,
                        const EffortLimits& limits = {}) {
    SolutionSet set = solve_all(inst, limits);
    SearchBound bound{inst.k + inst.l * inst.n, inst.k * inst.l + inst.n};
    auto found = brute_force_solutions(inst.k, inst.l, bound);

    std::vector<std::pair<Natural, Natural>> expected;
    for (const Solution& s : set.solutions) expected.emplace_back(s.x, s.y);
    std::sort(expected.begin(), expected.end());
    std::sort(found.begin(), found.end());
    return expected == found;
}

}  // namespace arctan_dioph
