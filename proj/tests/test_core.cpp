#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcss/core.hpp"

using namespace qcss;

TEST_CASE("entry_value evaluates exp(2 pi i e/L)") {
    PhaseExponentSequence s{30, {0, 15}};
    CHECK(std::abs(entry_value(s, 0) - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(entry_value(s, 1) - Complex{-1.0, 0.0}) < 1e-12);

    PhaseExponentSequence t{9, {3}};
    // exp(2 pi i /3)
    CHECK(entry_value(t, 0).real() == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(entry_value(t, 0).imag() == doctest::Approx(0.8660254037844386).epsilon(1e-9));

    CHECK_THROWS_AS(entry_value(s, 2), std::out_of_range);
    CHECK_THROWS_AS(entry_value(s, -1), std::out_of_range);
}

TEST_CASE("entry values stay unimodular and periodic in the exponent") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        int L = 1 + static_cast<int>(rng() % 97);
        long long e = rng() % L;
        CHECK(std::abs(std::abs(unit_phase(L, e)) - 1.0) < 1e-12);
        CHECK(std::abs(unit_phase(L, e) - unit_phase(L, e + L)) < 1e-12);
    }
}

TEST_CASE("qcss_lower_bound") {
    CHECK(qcss_lower_bound(7, 7, 12) == doctest::Approx(0.0));
    CHECK(qcss_lower_bound(15, 3, 5) == doctest::Approx(15.0 * std::sqrt(4.0 / 74.0)).epsilon(1e-9));
    // closed form N^2 sqrt((mu-2)/((mu-1)N^2-1)) at N = 9, mu = 3
    CHECK(qcss_lower_bound(18, 9, 9) == doctest::Approx(81.0 * std::sqrt(1.0 / 161.0)).epsilon(1e-9));
    CHECK(qcss_lower_bound(18, 9, 9) == doctest::Approx(6.38376).epsilon(1e-5));

    CHECK_THROWS_AS(qcss_lower_bound(2, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(qcss_lower_bound(1, 1, 1), std::invalid_argument);
}

TEST_CASE("welch_bound") {
    CHECK(welch_bound(10, 1) == doctest::Approx(0.0));
    CHECK(welch_bound(15, 15) == doctest::Approx(3.75).epsilon(1e-12));
    CHECK_THROWS_AS(welch_bound(1, 1), std::invalid_argument);
}

TEST_CASE("bound reduces to the Welch bound at K = 1 and never exceeds KN") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        long long K = 1 + rng() % 9;
        long long M = K + rng() % 40;
        long long N = 1 + rng() % 50;
        if (M * N <= 1) continue;
        double b = qcss_lower_bound(M, K, N);
        CHECK(b <= static_cast<double>(K) * N + 1e-9);
        if (M > 1) CHECK(qcss_lower_bound(M, 1, N) == doctest::Approx(welch_bound(N, M)).epsilon(1e-12));
    }
}

TEST_CASE("validation rejects out-of-range exponents and shape mismatches") {
    PhaseExponentSequence bad{4, {0, 4}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    ComplementaryMatrix mat{4, 2, 3, {0, 1, 2, 3, 0, 1}};
    CHECK_NOTHROW(mat.validate());
    mat.exponents.pop_back();
    CHECK_THROWS_AS(mat.validate(), std::invalid_argument);

    SequenceFamily fam;
    fam.members = {PhaseExponentSequence{4, {0, 1}}, PhaseExponentSequence{5, {0, 1}}};
    CHECK_THROWS_AS(fam.validate(), std::invalid_argument);
}
