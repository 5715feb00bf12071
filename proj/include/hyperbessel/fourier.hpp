#pragma once

/**
 * @file fourier.hpp
 * @brief The generalized Fourier transform between moment functionals and
 *        exponential-type series, with growth certificates and pairing.
 *
 * On moments the transform is the sign involution b_n = (-1)^n t_n, which
 * makes the round trip exact at any truncation. The analytic content lives
 * in the certificates: a moment certificate |t_n| <= C a^{rn} transports to
 * the coefficient side unchanged, and fitted certificates are computed by
 * the max rule over the stored range.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "hyperbessel/functional.hpp"
#include "hyperbessel/least_squares.hpp"
#include "hyperbessel/parallel.hpp"
#include "hyperbessel/series.hpp"
#include "hyperbessel/special.hpp"

namespace hb {

template <class Scalar>
struct PairResult {
    Scalar value;
    /// Bound on the contribution of coefficients beyond the stored moments
    /// (zero when the moments cover the series).
    double bound = 0.0;
};

/// <T, u> = sum_n c_n t_n over raw coefficients. Needs M >= N, or a
/// certificate to bound the uncovered terms.
template <class Scalar>
PairResult<Scalar> pair(const MomentFunctional<Scalar>& f, const REvenSeries<Scalar>& u) {
    if (f.vi() != u.vi()) throw ArgumentError("pair: vector index mismatch");
    const long n_max = u.truncation();
    const long covered = std::min(n_max, f.max_index());
    if (covered < n_max && !f.certificate())
        throw IncompletePairingError("pair: " + std::to_string(n_max + 1) + " moments needed, " +
                                     std::to_string(f.max_index() + 1) +
                                     " stored, no certificate");
    auto c = u.raw_coefficients();
    Scalar acc(0);
    for (long n = 0; n <= covered; ++n) acc += c[n] * f.moment(n);
    double bound = 0.0;
    if (covered < n_max) {
        const auto& cert = *f.certificate();
        double arn = std::pow(cert.a, static_cast<double>(u.vi().r()) * (covered + 1));
        double ar = std::pow(cert.a, u.vi().r());
        for (long n = covered + 1; n <= n_max; ++n) {
            bound += std::abs(to_complex(c[n])) * cert.C * arn;
            arn *= ar;
        }
    }
    return {acc, bound};
}

/// F(T)(z) = sum (-1)^n t_n z^{rn}/alpha_{rn}. The moment certificate, when
/// present, transfers verbatim; otherwise one is fitted from the coefficients.
template <class Scalar>
REvenSeries<Scalar> fourier(const MomentFunctional<Scalar>& f);

/// Inverse transform: moments t_n = (-1)^n b_n. The series must carry or
/// admit an exponential-type certificate.
template <class Scalar>
MomentFunctional<Scalar> inverse_fourier(const REvenSeries<Scalar>& v);

struct ExpTypeFit {
    ExpTypeCertificate certificate;
    bool zero_series = false;
};

/// Fits (C, a) with a = max_n |b_n|^{1/(rn)} and C = max_n |b_n|/a^{rn} over
/// the stored range; a is clamped to 1 when no coefficient past b_0 is
/// nonzero. Throws NotExponentialTypeError when the normalized growth rates
/// still climb across the range (no geometric envelope is credible).
template <class Scalar>
ExpTypeFit exp_type_fit(const REvenSeries<Scalar>& v) {
    const long n_max = v.truncation();
    if (n_max < 8) throw ArgumentError("exp_type_fit: need truncation >= 8");
    std::vector<double> mags(n_max + 1);
    for (long n = 0; n <= n_max; ++n) mags[n] = std::abs(to_complex(v.coeff(n)));
    if (looks_superexponential(mags, v.vi().r()))
        throw NotExponentialTypeError(
            "exp_type_fit: coefficient growth is super-exponential over the stored range");
    double a = 0.0;
    for (long n = 1; n <= n_max; ++n)
        if (mags[n] > 0.0)
            a = std::max(a, std::pow(mags[n], 1.0 / (static_cast<double>(v.vi().r()) * n)));
    bool zero = true;
    for (double m : mags)
        if (m > 0.0) { zero = false; break; }
    if (a <= 0.0) a = 1.0;
    double c = 0.0, arn = 1.0;
    double ar = std::pow(a, v.vi().r());
    for (long n = 0; n <= n_max; ++n) {
        c = std::max(c, mags[n] / arn);
        arn *= ar;
    }
    if (c <= 0.0) c = 1.0;
    // headroom so the certificate survives re-validation in floating math
    c *= 1.0 + 1e-12;
    return {ExpTypeCertificate(c, a, ExpTypeCertificate::Source::fitted), zero};
}

template <class Scalar>
REvenSeries<Scalar> fourier(const MomentFunctional<Scalar>& f) {
    std::vector<Scalar> u(f.moments().size());
    for (long n = 0; n <= f.max_index(); ++n)
        u[n] = (n % 2 == 0) ? f.moment(n) : -f.moment(n);
    REvenSeries<Scalar> out(f.vi(), std::move(u));
    if (f.certificate()) return out.with_certificate(*f.certificate());
    return out.with_certificate(exp_type_fit(out).certificate);
}

template <class Scalar>
MomentFunctional<Scalar> inverse_fourier(const REvenSeries<Scalar>& v) {
    ExpTypeCertificate cert =
        v.type_certificate() ? *v.type_certificate() : exp_type_fit(v).certificate;
    std::vector<Scalar> t(v.coefficients().size());
    for (long n = 0; n <= v.truncation(); ++n)
        t[n] = (n % 2 == 0) ? v.coeff(n) : -v.coeff(n);
    return MomentFunctional<Scalar>(v.vi(), std::move(t), cert);
}

/// Grid lower bound on P_a(v) = sup |v(z)| e^{-a|z|}. The sweep stays inside
/// the radius where the series' own certificate keeps the truncation tail
/// below 1e-9 e^{a|z|}, so the reported value is a genuine lower bound.
inline double pa_norm_estimate(const SeriesD& v, double a, int radii = 24, int angles = 16) {
    if (!(a > 0)) throw ArgumentError("pa_norm_estimate: a must be positive");
    ExpTypeCertificate cert =
        v.type_certificate() ? *v.type_certificate() : exp_type_fit(v).certificate;
    double r_max = 1.0;
    for (int it = 0; it < 12; ++it) {
        double candidate = r_max * 2.0;
        double tail = cert.C * exp_r_tail(cert.a * candidate, v.vi().r(), v.truncation());
        if (tail > 1e-9 * std::exp(a * candidate)) break;
        r_max = candidate;
        if (r_max > 512.0) break;
    }
    double best = std::abs(eval(v, 0.0).value); // z = 0 always admissible
    for (int i = 1; i <= radii; ++i) {
        double rad = r_max * i / radii;
        for (int j = 0; j < angles; ++j) {
            double th = 2.0 * std::numbers::pi * j / angles;
            std::complex<double> z = rad * std::complex<double>(std::cos(th), std::sin(th));
            best = std::max(best, std::abs(eval(v, z).value) * std::exp(-a * rad));
        }
    }
    return best;
}

struct DensityResult {
    double residual; // max |error| over the evaluation grid
    std::vector<std::complex<double>> coefficients;
    bool used_ridge = false;
};

namespace detail {

/// Deterministic polar grid on |z| <= radius (origin included).
inline std::vector<std::complex<double>> disk_grid(double radius, int radii, int angles) {
    std::vector<std::complex<double>> pts;
    pts.reserve(static_cast<size_t>(radii) * angles + 1);
    pts.emplace_back(0.0, 0.0);
    for (int i = 1; i <= radii; ++i) {
        double rad = radius * i / radii;
        for (int j = 0; j < angles; ++j) {
            double th = 2.0 * std::numbers::pi * j / angles;
            pts.emplace_back(rad * std::cos(th), rad * std::sin(th));
        }
    }
    return pts;
}

} // namespace detail

/// Least-squares witness for the density of span{j_gamma(lambda_i .)}:
/// minimizes the grid residual of sum c_i j(lambda_i z) - target over
/// |z| <= radius and reports the achieved grid-max residual.
inline DensityResult density_residual(const VectorIndex& vi,
                                      const std::vector<std::complex<double>>& lambdas,
                                      const SeriesD& target, double radius, int radii = 8,
                                      int angles = 16) {
    if (lambdas.empty()) throw ArgumentError("density_residual: need at least one node");
    if (target.vi() != vi) throw ArgumentError("density_residual: vector index mismatch");
    auto grid = detail::disk_grid(radius, radii, angles);
    const Eigen::Index rows = static_cast<Eigen::Index>(grid.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(lambdas.size());
    Eigen::MatrixXcd a(rows, cols);
    Eigen::VectorXcd b(rows);
    parallel_for(static_cast<long>(grid.size()), [&](long t) {
        for (Eigen::Index i = 0; i < cols; ++i)
            a(t, i) = j_eval(vi, lambdas[i] * grid[t], 1e-14).value;
        b(t) = eval(target, grid[t]).value;
    });
    auto ls = solve_least_squares(a, b);
    auto res = residual_highprec(a, ls.x, b);
    double worst = 0.0;
    for (const auto& e : res) worst = std::max(worst, std::abs(e));
    std::vector<std::complex<double>> coeffs(ls.x.data(), ls.x.data() + ls.x.size());
    return {worst, std::move(coeffs), ls.used_ridge};
}

} // namespace hb
