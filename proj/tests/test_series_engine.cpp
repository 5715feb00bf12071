#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "hyperbessel/series.hpp"
#include "hyperbessel/special.hpp"
#include "test_util.hpp"

using namespace hb;
using hbtest::random_series_q;
using hbtest::random_vi;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
const VectorIndex kCos(2, {q(-1, 2)}); // j = cos
const VectorIndex kSinc(2, {q(1, 2)}); // j = sin(z)/z
} // namespace

TEST_CASE("eval basics") {
    SeriesD one = SeriesD::basis(kCos, 0);
    auto r = eval(one, {3.0, 4.0});
    CHECK(r.value == std::complex<double>(1.0));
    REQUIRE(r.tail_bound.has_value());

    SeriesD j = j_series(kCos, {1.0, 0.0}, 40);
    CHECK(eval(j, 0.0).value == std::complex<double>(1.0));
    CHECK(std::abs(eval(j, 1.0).value - std::cos(1.0)) < 1e-13);

    // coefficients above the unit majorant suppress the tail certificate
    SeriesD big(kCos, {{2.0, 0.0}, {1.0, 0.0}});
    CHECK_FALSE(eval(big, 1.0).tail_bound.has_value());
}

TEST_CASE("eval overflow diagnostic") {
    SeriesD u = SeriesD::basis(kCos, 2);
    CHECK_THROWS_AS(eval(u, {1e200, 0.0}), OverflowError);
}

TEST_CASE("series arithmetic trivials") {
    std::mt19937 rng(101);
    SeriesQ u = random_series_q(rng, kCos, 12);
    SeriesQ zero = SeriesQ::zero(kCos, 12);
    CHECK(add(u, zero) == u);
    CHECK(scalar_mul(QComplex(1), u) == u);
    CHECK(coeff_equal(add(u, scalar_mul(QComplex(-1), u)), SeriesQ::zero(kCos)));

    SeriesQ other = random_series_q(rng, kSinc, 12);
    CHECK_THROWS_AS(add(u, other), ArgumentError);
    CHECK_THROWS_AS(multiply(u, other), ArgumentError);
}

TEST_CASE("multiply") {
    std::mt19937 rng(102);
    SeriesQ u = random_series_q(rng, kCos, 10);
    SeriesQ one = SeriesQ::basis(kCos, 0);
    CHECK(coeff_equal(multiply(u, one, 10), u));

    // (e_0 + e_1)^2 has raw c_2 = 1/alpha_r^2
    SeriesQ s(kCos, {QComplex(1), QComplex(1)});
    SeriesQ sq = multiply(s, s);
    REQUIRE(sq.truncation() == 2);
    auto raw = sq.raw_coefficients();
    CHECK(raw[2] == QComplex(q(1) / (alpha(kCos, 1) * alpha(kCos, 1))));

    // cos^2 via series product
    SeriesD j = j_series(kCos, {1.0, 0.0}, 40);
    SeriesD jj = multiply(j, j, 64);
    CHECK(std::abs(eval(jj, 1.0).value - std::cos(1.0) * std::cos(1.0)) < 1e-12);
}

TEST_CASE("apply_br shift behaviour") {
    CHECK(coeff_equal(apply_br(SeriesQ::basis(kCos, 1)), SeriesQ::basis(kCos, 0)));
    CHECK(coeff_equal(apply_br(SeriesQ::basis(kCos, 0)), SeriesQ::zero(kCos)));

    // eigen-relation with rational lambda^r: B_r j(lambda .) = -lambda^r j(lambda .)
    for (const Rational& mu : {q(1), q(-2, 3), q(9, 4)}) {
        SeriesQ j = j_series_from_power(kSinc, QComplex(mu), 16);
        SeriesQ lhs = apply_br(j);
        SeriesQ rhs = scalar_mul(QComplex(-mu), j_series_from_power(kSinc, QComplex(mu), 15));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("apply_br equals apply_br_raw exactly (rational mode)") {
    std::mt19937 rng(103);
    for (int rep = 0; rep < 60; ++rep) {
        int r = 2 + static_cast<int>(rng() % 3);
        VectorIndex vi = random_vi(rng, r);
        long n = 1 + rng() % 32;
        SeriesQ u = random_series_q(rng, vi, n);
        auto br = derive_br_coefficients(vi);
        REQUIRE(apply_br(u) == apply_br_raw(u, br));
    }
}

TEST_CASE("apply_br linearity and shift law") {
    std::mt19937 rng(104);
    VectorIndex vi = random_vi(rng, 3);
    SeriesQ u = random_series_q(rng, vi, 20);
    SeriesQ v = random_series_q(rng, vi, 20);
    QComplex a = hbtest::random_qcomplex(rng), b = hbtest::random_qcomplex(rng);
    CHECK(apply_br(add(scalar_mul(a, u), scalar_mul(b, v))) ==
          add(scalar_mul(a, apply_br(u)), scalar_mul(b, apply_br(v))));

    SeriesQ w = u;
    for (long k = 1; k <= u.truncation(); ++k) {
        w = apply_br(w);
        CHECK(w.truncation() == u.truncation() - k);
        CHECK(w.coeff(0) == u.coeff(k));
    }
    CHECK(coeff_equal(apply_br(w), SeriesQ::zero(vi)));
}

TEST_CASE("apply_br_integral matches the shift route") {
    // e_1 at z = 1: B_r e_1 = 1
    SeriesD e1 = to_floating(SeriesQ::basis(kCos, 1));
    CHECK(std::abs(apply_br_integral(e1, 1.0) - 1.0) < 1e-10);

    SeriesD c = SeriesD::basis(kCos, 0);
    CHECK(std::abs(apply_br_integral(c, {0.3, 1.1})) < 1e-12);

    // eigenfunction with lambda = 1: B_2 j = -j, here j = sin z / z
    SeriesD j = j_series(kSinc, {1.0, 0.0}, 40);
    double expect = -std::sin(2.0) / 2.0;
    CHECK(std::abs(apply_br_integral(j, 2.0) - expect) < 1e-9);

    std::mt19937 rng(105);
    for (int rep = 0; rep < 25; ++rep) {
        int r = 2 + static_cast<int>(rng() % 3);
        VectorIndex vi = random_vi(rng, r);
        SeriesD u = hbtest::random_series_d(rng, vi, 3 + rng() % 15);
        std::complex<double> z = hbtest::random_complex(rng, 2.5);
        std::complex<double> a = apply_br_integral(u, z);
        std::complex<double> b = eval(apply_br(u), z).value;
        CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("apply_br_integral flags quadrature disagreement") {
    // an integrand oscillating faster than 32 nodes can resolve but well
    // within reach of 64 (kSinc has a_1 != 0, so the integral term is
    // actually exercised)
    SeriesD fast = j_series(kSinc, {40.0, 0.0}, 80);
    CHECK_THROWS_AS(apply_br_integral(fast, 1.0), QuadratureError);
}

TEST_CASE("norm bounds") {
    SeriesD one = SeriesD::basis(kCos, 0);
    CHECK(norm_majorant(one, 2.0) == 1.0);
    CHECK(norm_grid(one, 2.0) == 1.0);

    SeriesD e1 = to_floating(SeriesQ::basis(kCos, 1));
    double inv_alpha = to_double(q(1) / alpha(kCos, 1));
    CHECK(norm_majorant(e1, 1.0) == Catch::Approx(inv_alpha));
    CHECK(norm_grid(e1, 1.0) == Catch::Approx(inv_alpha));

    // |cos| on |z| = 1 peaks at the imaginary axis: cosh(1)
    SeriesD j = j_series(kCos, {1.0, 0.0}, 40);
    CHECK(norm_grid(j, 1.0, 64) == Catch::Approx(std::cosh(1.0)).epsilon(1e-12));

    std::mt19937 rng(106);
    for (int rep = 0; rep < 20; ++rep) {
        VectorIndex vi = random_vi(rng, 2 + static_cast<int>(rng() % 3));
        SeriesD u = hbtest::random_series_d(rng, vi, 2 + rng() % 12);
        double prev = 0.0;
        for (int m : {8, 16, 32, 64}) {
            double g = norm_grid(u, 1.5, m);
            CHECK(g >= prev - 1e-15);
            prev = g;
        }
        CHECK(prev <= norm_majorant(u, 1.5) * (1.0 + 1e-12));
    }
}

TEST_CASE("iterate norm inequality") {
    SeriesD one = SeriesD::basis(kCos, 0);
    for (int n : {1, 2, 3}) CHECK(br_power_norm_check(one, 1.0, n).pass);

    auto rep = br_power_norm_check(to_floating(SeriesQ::basis(kCos, 1)), 1.0, 1);
    CHECK(rep.lhs == Catch::Approx(1.0));
    CHECK(rep.pass);

    SeriesD j = j_series(VectorIndex(2, {q(1, 2)}), {1.0, 0.0}, 30);
    CHECK(br_power_norm_check(j, 1.0, 3).pass);

    std::mt19937 rng(107);
    for (int rep_i = 0; rep_i < 40; ++rep_i) {
        VectorIndex vi = random_vi(rng, 2 + static_cast<int>(rng() % 3));
        SeriesD u = hbtest::random_series_d(rng, vi, 1 + rng() % 8);
        int n = 1 + static_cast<int>(rng() % 5);
        for (double radius : {0.5, 1.0, 2.0}) CHECK(br_power_norm_check(u, radius, n).pass);
    }
}

TEST_CASE("raw coefficient round trip") {
    std::mt19937 rng(108);
    VectorIndex vi = random_vi(rng, 4);
    SeriesQ u = random_series_q(rng, vi, 16);
    CHECK(SeriesQ::from_raw(vi, u.raw_coefficients()) == u);
}
