#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcss/field.hpp"

using namespace qcss;

TEST_CASE("prime field GF(2)") {
    auto ctx = FieldContext::build(2, 1);
    CHECK(ctx.q() == 2);
    CHECK(ctx.alpha() == 1);
    CHECK(ctx.trace(0) == 0);
    CHECK(ctx.trace(1) == 1);
}

TEST_CASE("GF(16) uses the canonical modulus and Tr(1) = 0") {
    auto ctx = FieldContext::build(2, 4);
    CHECK(ctx.q() == 16);
    // x^4 + x + 1, low-degree first
    CHECK(ctx.modulus() == std::vector<int>{1, 1, 0, 0, 1});
    CHECK(ctx.alpha() == 2);
    CHECK(ctx.trace(1) == 0);
}

TEST_CASE("GF(9) trace is balanced across GF(3)") {
    auto ctx = FieldContext::build(3, 2);
    CHECK(ctx.q() == 9);
    int counts[3] = {0, 0, 0};
    for (long long x = 0; x < 9; ++x) ++counts[ctx.trace(x)];
    CHECK(counts[0] == 3);
    CHECK(counts[1] == 3);
    CHECK(counts[2] == 3);
}

TEST_CASE("dlog is the inverse of alpha_pow and trace is linear") {
    for (auto [p, n] : {std::pair{2, 4}, {3, 2}, {5, 2}, {7, 1}, {3, 3}}) {
        auto ctx = FieldContext::build(p, n);
        const long long q = ctx.q();
        for (long long j = 0; j < q - 1; ++j) CHECK(ctx.dlog(ctx.alpha_pow(j)) == j);
        for (long long x = 0; x < q; ++x)
            for (long long y = 0; y < q; ++y)
                CHECK(ctx.trace(ctx.add(x, y)) == (ctx.trace(x) + ctx.trace(y)) % p);
    }
}

TEST_CASE("build_field rejects bad inputs") {
    CHECK_THROWS_AS(FieldContext::build(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::build(2, 25), std::invalid_argument);  // over cap
}

TEST_CASE("additive characters: trivial case and group law") {
    auto ctx = FieldContext::build(2, 4);
    for (long long x = 0; x < 16; ++x) CHECK(additive_char_exponent(ctx, 0, x) == 0);
    for (long long a = 0; a < 16; ++a)
        for (long long x = 0; x < 16; ++x)
            for (long long y = 0; y < 16; ++y) {
                int lhs = additive_char_exponent(ctx, a, ctx.add(x, y));
                int rhs = (additive_char_exponent(ctx, a, x) + additive_char_exponent(ctx, a, y)) % 2;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("orthogonality of additive and multiplicative characters") {
    for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
        auto ctx = FieldContext::build(p, n);
        const long long q = ctx.q();
        for (long long a = 0; a < q; ++a) {
            Complex sum = 0.0;
            for (long long x = 0; x < q; ++x) sum += unit_phase(p, additive_char_exponent(ctx, a, x));
            if (a == 0) CHECK(std::abs(sum - Complex(static_cast<double>(q))) < 1e-6);
            else CHECK(std::abs(sum) < 1e-6);
        }
        for (long long i = 0; i < q - 1; ++i) {
            Complex sum = 0.0;
            for (long long j = 0; j < q - 1; ++j)
                sum += unit_phase(q - 1, multiplicative_char_exponent(ctx, i, ctx.alpha_pow(j)));
            if (i == 0) CHECK(std::abs(sum - Complex(static_cast<double>(q - 1))) < 1e-6);
            else CHECK(std::abs(sum) < 1e-6);
        }
    }
}

TEST_CASE("multiplicative characters reject 0") {
    auto ctx = FieldContext::build(3, 2);
    CHECK_THROWS_AS(multiplicative_char_exponent(ctx, 1, 0), std::invalid_argument);
}

TEST_CASE("Gauss sums take the four classical values") {
    for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {2, 4}, {5, 2}}) {
        auto ctx = FieldContext::build(p, n);
        const long long q = ctx.q();
        const double sq = std::sqrt(static_cast<double>(q));
        for (long long i = 0; i < q - 1; ++i)
            for (long long a = 0; a < q; ++a) {
                Complex g = gauss_sum(ctx, i, a);
                if (i == 0 && a == 0) CHECK(std::abs(g - Complex(static_cast<double>(q - 1))) < 1e-6);
                else if (i == 0) CHECK(std::abs(g - Complex(-1.0)) < 1e-6);
                else if (a == 0) CHECK(std::abs(g) < 1e-6);
                else CHECK(std::abs(g) == doctest::Approx(sq).epsilon(1e-6));
            }
    }
}
