#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperbessel/vector_index.hpp"

using namespace hb;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

VectorIndex vi_r2(const Rational& g) { return VectorIndex(2, {g}); }

Rational factorial(long n) {
    Rational f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
}

// brute-force oracle: alpha as the literal telescoped product
Rational alpha_oracle(const VectorIndex& vi, long n) {
    Rational out = 1;
    for (long i = 0; i < vi.r() * n; ++i) out *= vi.r();
    out *= factorial(n);
    for (const Rational& g : vi.gamma())
        for (long j = 1; j <= n; ++j) out *= g + j;
    return out;
}

} // namespace

TEST_CASE("vector index validation") {
    CHECK_THROWS_AS(VectorIndex(1, {}), ArgumentError);
    CHECK_THROWS_AS(VectorIndex(2, {}), ArgumentError);                 // wrong gamma length
    CHECK_THROWS_AS(VectorIndex(2, {q(-3, 4)}), ArgumentError);         // below -1/2
    CHECK_NOTHROW(VectorIndex(2, {q(-1, 2)}));                          // boundary allowed
    CHECK_NOTHROW(VectorIndex(3, {q(-2, 3), q(-1, 3)}));
    CHECK_THROWS_AS(VectorIndex(3, {q(-2, 3), q(-1, 2)}), ArgumentError);

    VectorIndex vi(4, {q(-3, 4), q(0), q(2, 5)});
    CHECK(vi.r() == 4);
    auto w = vi.root_of_unity();
    CHECK(std::abs(std::pow(w, 4) - std::complex<double>(1.0)) < 1e-14);
}

TEST_CASE("alpha examples") {
    CHECK(alpha(vi_r2(q(1, 2)), 0) == 1);
    CHECK(alpha(VectorIndex(3, {q(-2, 3), q(-1, 3)}), 0) == 1);
    CHECK(alpha(vi_r2(q(1, 2)), 1) == 6);
    CHECK(alpha(VectorIndex(3, {q(-2, 3), q(-1, 3)}), 2) == 720); // = 6!
}

TEST_CASE("alpha lower bound and table consistency") {
    std::vector<VectorIndex> vis = {vi_r2(q(-1, 2)), vi_r2(q(1, 2)), vi_r2(q(7, 3)),
                                    VectorIndex(3, {q(-2, 3), q(5, 7)}),
                                    VectorIndex(4, {q(-3, 4), q(-1, 2), q(3)})};
    for (const auto& vi : vis) {
        AlphaTable table(vi, 64);
        for (long n = 0; n <= 64; ++n) {
            CHECK(table.value(n) >= factorial(vi.r() * n));
            CHECK(table.value(n) == alpha_oracle(vi, n));
        }
    }
}

TEST_CASE("alpha_ratio") {
    CHECK(alpha_ratio(vi_r2(q(-1, 2)), 1) == 2);
    CHECK(alpha_ratio(vi_r2(q(1, 2)), 2) == 20); // alpha_4/alpha_2 = 120/6

    // n = 1 closed form: r^r prod (gamma_i + 1)
    VectorIndex vi(3, {q(-2, 3), q(5, 7)});
    CHECK(alpha_ratio(vi, 1) == Rational(27) * q(1, 3) * q(12, 7));

    for (long n = 1; n <= 64; ++n)
        CHECK(alpha_ratio(vi, n) * alpha(vi, n - 1) == alpha(vi, n));

    CHECK_THROWS_AS(alpha_ratio(vi, 0), ArgumentError);
}

TEST_CASE("Br coefficients: classical families") {
    for (const Rational& nu : {q(-1, 2), q(1, 2), q(3), q(7, 3)}) {
        auto br = derive_br_coefficients(vi_r2(nu));
        CHECK(br.coefficient(1) == 2 * nu + 1);
        CHECK(br.M == 1 + rational_abs(2 * nu + 1));
    }
    // third-order family: a_1 = 3 nu, a_2 = -3 nu
    for (const Rational& nu : {q(1), q(1, 3), q(5, 2)}) {
        auto br = derive_br_coefficients(VectorIndex(3, {q(-2, 3), nu - q(1, 3)}));
        CHECK(br.coefficient(1) == 3 * nu);
        CHECK(br.coefficient(2) == -3 * nu);
    }
}

TEST_CASE("Br coefficients: falling-factorial identity at extra points") {
    std::mt19937 rng(7101);
    std::uniform_int_distribution<long> num(-5, 8), den(1, 6);
    for (int rep = 0; rep < 40; ++rep) {
        int r = 2 + static_cast<int>(rng() % 4); // r in 2..5
        std::vector<Rational> gamma;
        for (int k = 1; k < r; ++k) {
            Rational lo(k - r, r);
            Rational g = lo + rational_abs(q(num(rng), den(rng)));
            gamma.push_back(g);
        }
        VectorIndex vi(r, gamma);
        auto br = derive_br_coefficients(vi);
        for (long m = r; m <= 3 * r - 1; ++m) {
            Rational lhs(m);
            for (const Rational& g : vi.gamma()) lhs *= Rational(m) + Rational(r) * g;
            Rational rhs = falling_factorial(Rational(m), r);
            for (int k = 1; k <= r - 1; ++k)
                rhs += br.coefficient(k) * falling_factorial(Rational(m), r - k);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("Br coefficients: printed closed form recorded per coefficient") {
    // order two: the single-term form is correct
    auto br2 = derive_br_coefficients(vi_r2(q(1, 2)));
    REQUIRE(br2.closed_form_match.size() == 1);
    CHECK(br2.closed_form_match[0]);

    // order three with nu = 1: the k = 2 sum collapses and misses a_1
    auto br3 = derive_br_coefficients(VectorIndex(3, {q(-2, 3), q(2, 3)}));
    REQUIRE(br3.closed_form_match.size() == 2);
    CHECK_FALSE(br3.closed_form_match[0]); // a_1 = 3 nu vs collapsed 0
    CHECK(br3.closed_form_match[1]);       // a_2 agrees
}

TEST_CASE("reduction gamma_k = -1 + k/r") {
    for (int r = 2; r <= 5; ++r) {
        VectorIndex vi = derivative_index(r);
        for (long n = 0; n <= 12; ++n) CHECK(alpha(vi, n) == factorial(r * n));
        auto br = derive_br_coefficients(vi);
        for (int k = 1; k <= r - 1; ++k) CHECK(br.coefficient(k) == 0);
        CHECK(br.M == 1);
    }
}

TEST_CASE("generalized binomial") {
    VectorIndex vi(3, {q(-2, 3), q(5, 7)});
    for (long n : {0L, 1L, 5L, 9L}) CHECK(generalized_binomial(vi, n, 0) == 1);
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(generalized_binomial(vi, n, k) == generalized_binomial(vi, n, n - k));
    CHECK(generalized_binomial(vi_r2(q(-1, 2)), 2, 1) == 6); // C(4,2)
    CHECK_THROWS_AS(generalized_binomial(vi, 3, 4), ArgumentError);
    CHECK_THROWS_AS(generalized_binomial(vi, 3, -1), ArgumentError);
}

TEST_CASE("alpha table test hook accepts external values") {
    VectorIndex vi = vi_r2(q(-1, 2));
    auto table = AlphaTable::from_values(vi, {q(1), q(2), q(24)});
    CHECK(table.value(2) == 24);
    CHECK_THROWS_AS(table.value(3), ArgumentError);
}
