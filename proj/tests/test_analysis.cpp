#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcss/analysis.hpp"
#include "qcss/field.hpp"
#include "qcss/generators.hpp"
#include "qcss/interleave.hpp"

using namespace qcss;

TEST_CASE("optimality_ratio") {
    CHECK(optimality_ratio(4.0, 15, 3, 5) == doctest::Approx(1.14698).epsilon(1e-5));
    CHECK(optimality_ratio(9.0, 18, 9, 9) == doctest::Approx(1.40983).epsilon(1e-5));
    CHECK_THROWS_AS(optimality_ratio(1.0, 9, 9, 9), std::invalid_argument);
}

TEST_CASE("generated families always sit above the bound") {
    for (int N : {9, 15, 21}) {
        auto fam = gen_thm41_family(N, Permutation::identity(N));
        auto report = measure_theta_max(fam);
        CHECK(report.measured_max >= qcss_lower_bound(fam.size(), fam.flock(), fam.length()) - 1e-9);
    }
}

TEST_CASE("prop1-interleaved trend decreases toward 1") {
    auto table = ratio_trend(FamilyKind::prop1_interleaved, {16, 64});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].K == 3);
    CHECK(table.rows[0].N == 5);
    CHECK(table.rows[0].ratio == doctest::Approx(1.14698).epsilon(1e-5));
    CHECK(table.rows[1].K == 3);  // smallest nontrivial divisor of 63
    CHECK(table.rows[1].N == 21);
    CHECK(table.rows[1].ratio < table.rows[0].ratio);
    CHECK(table.rows[1].ratio > 1.0);
    CHECK(table.direction == "decreasing");
}

TEST_CASE("thm41 trend: closed-form cross-check and mu_min = 3 points reported as-is") {
    auto table = ratio_trend(FamilyKind::thm41, {9, 25, 49});
    REQUIRE(table.rows.size() == 3);
    for (const auto& row : table.rows) {
        const double mu = smallest_prime_factor(row.size_param);
        const double N = static_cast<double>(row.size_param);
        const double closed = N / (N * N * std::sqrt((mu - 2) / ((mu - 1) * N * N - 1)));
        CHECK(row.ratio == doctest::Approx(closed).epsilon(1e-6));
        CHECK(row.ratio > 0.0);
    }
    // mu_min = 3 keeps the ratio bounded away from 1; it is reported, not hidden
    CHECK(table.rows[0].ratio > 1.3);
    CHECK(table.direction == "decreasing");
}

TEST_CASE("invalid sweep points are skipped with a notice") {
    auto table = ratio_trend(FamilyKind::thm41, {9, 8, 15});
    CHECK(table.rows.size() == 2);
    CHECK(table.notices.size() == 1);
}

TEST_CASE("verify_declared passes generated families") {
    auto fam = gen_thm41_family(15, Permutation::identity(15));
    auto v = verify_declared(fam);
    CHECK(v.pass());
    CHECK(v.measured == doctest::Approx(15.0).epsilon(1e-6));
    REQUIRE(v.case_structure_ok.has_value());
    CHECK(*v.case_structure_ok);

    auto ctx = FieldContext::build(3, 2);
    auto seq = gen_prop1_family(ctx);
    auto vs = verify_declared(seq);
    CHECK(vs.pass());
    CHECK(vs.measured == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("a single flipped exponent breaks the case structure") {
    auto fam = gen_thm41_family(9, Permutation::identity(9));
    fam.members[4].at(3, 7) = (fam.members[4].at(3, 7) + 1) % 9;
    auto v = verify_declared(fam);
    REQUIRE(v.case_structure_ok.has_value());
    CHECK_FALSE(*v.case_structure_ok);
    CHECK_FALSE(v.pass());
}

TEST_CASE("verify_declared requires a declaration") {
    QcssFamily fam = gen_thm41_family(9, Permutation::identity(9));
    fam.declared_vartheta_max.reset();
    CHECK_THROWS_AS(verify_declared(fam), std::invalid_argument);
}
