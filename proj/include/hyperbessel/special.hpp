#pragma once

/**
 * @file special.hpp
 * @brief Certified evaluation of the normalized Bessel function j_gamma and
 *        its all-positive companion G_gamma.
 *
 * Truncation control always uses the universal majorant alpha_{rn} >= (rn)!,
 * so every returned bound is valid for every admissible gamma.
 */

#include <cmath>
#include <complex>
#include <limits>

#include "hyperbessel/series.hpp"

namespace hb {

/// Truncated series of j_gamma(lambda z): normalized coefficients
/// u_n = (-1)^n lambda^{rn}.
template <class Scalar>
REvenSeries<Scalar> j_series(const VectorIndex& vi, const Scalar& lambda, long n_trunc) {
    std::vector<Scalar> u(n_trunc + 1);
    Scalar lr = scalar_pow(lambda, vi.r());
    u[0] = Scalar(1);
    for (long n = 1; n <= n_trunc; ++n) u[n] = -(u[n - 1] * lr);
    return REvenSeries<Scalar>(vi, std::move(u));
}

inline SeriesD j_series(const VectorIndex& vi, std::complex<double> lambda,
                        long n_trunc = kDefaultTruncation) {
    return j_series<std::complex<double>>(vi, lambda, n_trunc);
}

/// Same series parametrized by mu = lambda^r, so rational eigenvalues stay
/// exact even when lambda itself is irrational: u_n = (-mu)^n.
template <class Scalar>
REvenSeries<Scalar> j_series_from_power(const VectorIndex& vi, const Scalar& mu, long n_trunc) {
    std::vector<Scalar> u(n_trunc + 1);
    u[0] = Scalar(1);
    for (long n = 1; n <= n_trunc; ++n) u[n] = -(u[n - 1] * mu);
    return REvenSeries<Scalar>(vi, std::move(u));
}

struct JEvalResult {
    std::complex<double> value;
    double bound;  // certified tail bound at the chosen truncation
    long n_used;
};

/// Adaptive evaluation of j_gamma(z): picks the minimal N whose factorial
/// tail bound is below tol, then sums with compensated accumulation.
inline JEvalResult j_eval(const VectorIndex& vi, std::complex<double> z, double tol = 1e-12) {
    if (!(tol > 0)) throw ArgumentError("j_eval: tolerance must be positive");
    double az = std::abs(z);
    if (az > 700.0) throw OverflowError("j_eval: |z| too large for double evaluation", 0);
    if (tol < 8.0 * std::numeric_limits<double>::epsilon() * std::exp(az))
        throw PrecisionError("j_eval: tolerance below attainable double precision");
    if (az == 0.0) return {1.0, 0.0, 0};

    long n = 0;
    double tail = exp_r_tail(az, vi.r(), 0);
    while (tail > tol) {
        ++n;
        tail = exp_r_tail(az, vi.r(), n);
        if (n > 100000) throw PrecisionError("j_eval: truncation search did not converge");
    }

    std::complex<double> zr = std::pow(z, vi.r());
    CompensatedSum sum;
    std::complex<double> term = 1.0;
    sum.add(term);
    for (long k = 1; k <= n; ++k) {
        term *= -zr * to_double(Rational(1) / alpha_ratio(vi, k));
        sum.add(term);
    }
    return {sum.value(), tail, n};
}

/// G_gamma(x) = sum x^{rn}/alpha_{rn}, x >= 0; all terms positive, so the
/// partial sum is monotone. Satisfies |j_gamma(z)| <= G_gamma(|z|) <= e^{|z|}.
inline double g_eval(const VectorIndex& vi, double x) {
    if (x < 0) throw ArgumentError("g_eval: argument must be nonnegative");
    if (x > 700.0) throw OverflowError("g_eval: argument too large for double evaluation", 0);
    double xr = std::pow(x, vi.r());
    double sum = 1.0, term = 1.0;
    for (long n = 1; n <= 100000; ++n) {
        term *= xr * to_double(Rational(1) / alpha_ratio(vi, n));
        sum += term;
        if (term <= sum * 1e-17) break;
    }
    return sum;
}

} // namespace hb
