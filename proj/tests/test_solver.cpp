#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "arctan_dioph/solver.hpp"

using namespace arctan_dioph;

namespace {

std::vector<std::pair<Natural, Natural>> pairs_of(const SolutionSet& set) {
    std::vector<std::pair<Natural, Natural>> out;
    for (const Solution& s : set.solutions) out.emplace_back(s.x, s.y);
    return out;
}

}  // namespace

TEST_CASE("make_instance validates") {
    auto i1 = make_instance(2, 1);
    CHECK(i1.n == 5);
    auto i2 = make_instance(1, 1);
    CHECK(i2.n == 2);

    CHECK_THROWS_AS(make_instance(0, 1), InvalidK);
    CHECK_THROWS_AS(make_instance(2, 0), InvalidL);
    try {
        make_instance(3, 2);
        FAIL("expected NotCoprime");
    } catch (const NotCoprime& e) {
        CHECK(e.gcd() == 2);
    }
}

TEST_CASE("solution_for_divisor hand cases") {
    auto inst = make_instance(2, 1);
    auto s5 = solution_for_divisor(inst, 5);
    CHECK(s5.x == 3);
    CHECK(s5.y == 7);
    auto s1 = solution_for_divisor(inst, 1);
    CHECK(s1.x == 7);
    CHECK(s1.y == 3);
    CHECK(s1.v == 5);

    auto s = solution_for_divisor(make_instance(4, 2), 1);
    CHECK(s.x == 38);
    CHECK(s.y == 9);

    CHECK_THROWS_AS(solution_for_divisor(inst, 3), NotADivisor);
    CHECK_THROWS_AS(solution_for_divisor(inst, 0), NotADivisor);
}

TEST_CASE("solve_all hand cases") {
    auto set2 = solve_all(make_instance(2, 1));
    CHECK(pairs_of(set2) ==
          std::vector<std::pair<Natural, Natural>>{{7, 3}, {3, 7}});

    auto set1 = solve_all(make_instance(1, 1));
    CHECK(pairs_of(set1) ==
          std::vector<std::pair<Natural, Natural>>{{3, 2}, {2, 3}});

    auto set7 = solve_all(make_instance(7, 1));
    CHECK(pairs_of(set7) == std::vector<std::pair<Natural, Natural>>{
                                {57, 8},
                                {32, 9},
                                {17, 12},
                                {12, 17},
                                {9, 32},
                                {8, 57}});
    CHECK(set7.count() == 6);
}

TEST_CASE("prime case specialization") {
    auto p2 = prime_case_solutions(make_instance(2, 1));
    CHECK(pairs_of(p2) ==
          std::vector<std::pair<Natural, Natural>>{{7, 3}, {3, 7}});

    auto p4 = prime_case_solutions(make_instance(4, 2));
    CHECK(pairs_of(p4) ==
          std::vector<std::pair<Natural, Natural>>{{38, 9}, {6, 25}});

    auto p6 = prime_case_solutions(make_instance(6, 1));
    CHECK(pairs_of(p6) ==
          std::vector<std::pair<Natural, Natural>>{{43, 7}, {7, 43}});

    CHECK_THROWS_AS(prime_case_solutions(make_instance(3, 1)), NotPrimeCase);
}

TEST_CASE("semiprime case specialization") {
    auto s3 = semiprime_case_solutions(make_instance(3, 1));
    CHECK(pairs_of(s3) == std::vector<std::pair<Natural, Natural>>{
                              {13, 4}, {8, 5}, {5, 8}, {4, 13}});

    auto s37 = semiprime_case_solutions(make_instance(3, 7));
    CHECK(pairs_of(s37) == std::vector<std::pair<Natural, Natural>>{
                               {73, 22}, {38, 23}, {17, 26}, {10, 31}});

    CHECK_THROWS_AS(semiprime_case_solutions(make_instance(2, 1)),
                    NotSemiprimeCase);
    // 7^2 + 1 = 50 = 2 * 5^2: neither prime nor a distinct-prime product.
    CHECK_THROWS_AS(semiprime_case_solutions(make_instance(7, 1)),
                    NotSemiprimeCase);
}

TEST_CASE("solution set invariants over a grid") {
    for (unsigned k = 1; k <= 25; ++k) {
        for (unsigned l = 1; l <= 10; ++l) {
            Natural n = Natural(k) * k + 1;
            if (gcd(l, n) != 1) continue;
            auto inst = make_instance(k, l);
            auto set = solve_all(inst);

            CHECK(Natural(set.count()) == divisor_count(factorize(n)));

            std::set<Natural> ys;
            for (const Solution& s : set.solutions) {
                // Algebraic form of the identity, exact.
                CHECK(s.x * s.y - inst.l == inst.k * (s.y + s.x * inst.l));
                CHECK(gcd(inst.l, s.y) == 1);
                CHECK(s.d * s.v == n);
                CHECK(s.x > inst.k);
                CHECK(s.y > inst.k * inst.l);
                // Divisor pairing.
                CHECK((s.x - inst.k) * s.d == inst.l * n);
                ys.insert(s.y);
            }
            CHECK(ys.size() == set.count());

            // Ascending d gives strictly ascending y; paired divisors d and
            // n/d multiply the y-offsets back to n.
            for (std::size_t i = 0; i + 1 < set.solutions.size(); ++i)
                CHECK(set.solutions[i].y < set.solutions[i + 1].y);
            for (const Solution& a : set.solutions) {
                const Solution& b = *std::find_if(
                    set.solutions.begin(), set.solutions.end(),
                    [&](const Solution& s) { return s.d == a.v; });
                CHECK((a.y - inst.k * inst.l) * (b.y - inst.k * inst.l) == n);
            }
        }
    }
}

TEST_CASE("l=1 solution sets are symmetric under swap") {
    for (unsigned k = 1; k <= 50; ++k) {
        auto set = solve_all(make_instance(k, 1));
        std::set<std::pair<Natural, Natural>> pairs;
        for (const Solution& s : set.solutions) pairs.emplace(s.x, s.y);
        for (const auto& [x, y] : pairs)
            CHECK(pairs.count({y, x}) == 1);
    }
}

TEST_CASE("specializations agree with solve_all") {
    for (unsigned k = 1; k <= 60; ++k) {
        auto inst = make_instance(k, 1);
        auto all = solve_all(inst);
        auto f = factorize(inst.n);
        if (is_probable_prime(inst.n)) {
            CHECK(prime_case_solutions(inst).solutions == all.solutions);
        } else if (f.factors.size() == 2 && f.factors[0].second == 1 &&
                   f.factors[1].second == 1) {
            CHECK(semiprime_case_solutions(inst).solutions == all.solutions);
        }
    }
}
