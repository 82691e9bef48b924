#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "qcss/correlation.hpp"
#include "qcss/generators.hpp"

using namespace qcss;

TEST_CASE("smallest_prime_factor") {
    CHECK(smallest_prime_factor(9) == 3);
    CHECK(smallest_prime_factor(15) == 3);
    CHECK(smallest_prime_factor(35) == 5);
    CHECK(smallest_prime_factor(49) == 7);
    CHECK_THROWS_AS(smallest_prime_factor(1), std::invalid_argument);
}

TEST_CASE("solve_linear_congruence") {
    CHECK(solve_linear_congruence(1, 5, 9) == std::vector<long long>{5});
    CHECK(solve_linear_congruence(3, 6, 9) == std::vector<long long>{2, 5, 8});
    CHECK(solve_linear_congruence(3, 4, 9).empty());
    CHECK_THROWS_AS(solve_linear_congruence(1, 0, 1), std::invalid_argument);
}

TEST_CASE("solution count equals gcd when it divides b") {
    for (long long m = 2; m <= 30; ++m)
        for (long long a = 0; a < m; ++a)
            for (long long b = 0; b < m; ++b) {
                auto sols = solve_linear_congruence(a, b, m);
                long long g = std::gcd(a == 0 ? m : a, m);
                CHECK(sols.size() == (b % g == 0 ? static_cast<size_t>(g) : 0u));
            }
}

TEST_CASE("prop1 family shape and j = 0 row") {
    auto ctx = FieldContext::build(2, 4);
    auto fam = gen_prop1_family(ctx);
    CHECK(fam.size() == 15);
    CHECK(fam.period() == 15);
    CHECK(fam.order() == 30);
    CHECK(*fam.declared_theta_max == doctest::Approx(4.0));
    // phi_0 is trivial, so the j = 0 sequence is purely the additive character: +-1 only
    for (int e : fam.members[0].exponents) CHECK((e == 0 || e == 15));
}

TEST_CASE("prop1 measured theta_max is sqrt(q)") {
    for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
        auto ctx = FieldContext::build(p, n);
        auto fam = gen_prop1_family(ctx);
        auto report = measure_theta_max(fam);
        CHECK(report.measured_max ==
              doctest::Approx(std::sqrt(static_cast<double>(ctx.q()))).epsilon(1e-6));
    }
}

TEST_CASE("thm41 family: shape, example rows, self-peak") {
    auto fam = gen_thm41_family(9, Permutation::identity(9));
    CHECK(fam.size() == 18);
    CHECK(fam.flock() == 9);
    CHECK(fam.length() == 9);
    CHECK(*fam.declared_vartheta_max == doctest::Approx(9.0));
    // C^{a=1,b=0}: entry (i, j) = i*j mod 9, first row all zeros
    const auto& c0 = fam.members[0];
    for (int j = 0; j < 9; ++j) {
        CHECK(c0.at(0, j) == 0);
        CHECK(c0.at(5, j) == 5 * j % 9);
    }
    CHECK(std::abs(pcf(c0, c0, 0) - Complex(81.0)) < 1e-9);
}

TEST_CASE("thm41 members are pairwise distinct") {
    for (int N : {9, 15, 21}) {
        auto fam = gen_thm41_family(N, Permutation::identity(N));
        std::set<std::vector<int>> grids;
        for (const auto& m : fam.members) grids.insert(m.exponents);
        CHECK(grids.size() == fam.members.size());
        CHECK(static_cast<int>(grids.size()) == (smallest_prime_factor(N) - 1) * N);
    }
}

TEST_CASE("thm41/thm42 reject invalid inputs") {
    CHECK_THROWS_AS(gen_thm41_family(8, Permutation::identity(8)), std::invalid_argument);
    CHECK_THROWS_AS(gen_thm41_family(1, Permutation::identity(1)), std::invalid_argument);
    CHECK_THROWS_AS(gen_thm42_family(9, Permutation::reversal(9)), std::invalid_argument);
    CHECK_THROWS_AS(gen_thm41_row_deleted(9, Permutation::identity(9), 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_thm41_row_deleted(9, Permutation::identity(9), 10), std::invalid_argument);
}

TEST_CASE("thm42 equals thm41 with the rho-zero row deleted") {
    auto direct = gen_thm42_family(9, Permutation::identity(9));
    auto via_del = gen_thm41_row_deleted(9, Permutation::identity(9), 1);
    REQUIRE(direct.size() == via_del.size());
    for (int m = 0; m < direct.size(); ++m)
        CHECK(direct.members[m].exponents == via_del.members[m].exponents);
    CHECK(direct.flock() == 8);
}

TEST_CASE("thm42 case values: same matrix tau != 0 has magnitude N, a1=a2 b1!=b2 is 0") {
    auto fam = gen_thm42_family(9, Permutation::identity(9));
    const auto& A = fam.members[0];  // (a=1, b=0)
    for (int tau = 1; tau < 9; ++tau) CHECK(std::abs(pcf(A, A, tau)) == doctest::Approx(9.0).epsilon(1e-6));
    const auto& B = fam.members[2];  // (a=1, b=1)
    for (int tau = 0; tau < 9; ++tau) CHECK(std::abs(pcf(A, B, tau)) < 1e-6);
}

TEST_CASE("measured vartheta_max is rho-invariant") {
    auto id = measure_theta_max(gen_thm41_family(9, Permutation::identity(9)));
    auto rev = measure_theta_max(gen_thm41_family(9, Permutation::reversal(9)));
    Permutation rho{{3, 1, 4, 0, 8, 5, 6, 2, 7}, "scrambled"};
    auto other = measure_theta_max(gen_thm41_family(9, rho));
    CHECK(id.measured_max == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(rev.measured_max == doctest::Approx(id.measured_max).epsilon(1e-9));
    CHECK(other.measured_max == doctest::Approx(id.measured_max).epsilon(1e-9));
}

TEST_CASE("row deletion keeps vartheta_max = N") {
    auto fam = gen_thm41_row_deleted(9, Permutation::identity(9), 5);
    CHECK(fam.flock() == 8);
    auto report = measure_theta_max(fam);
    CHECK(report.measured_max == doctest::Approx(9.0).epsilon(1e-6));
}
