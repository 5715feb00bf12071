#pragma once

/**
 * @file series.hpp
 * @brief Truncated r-even entire functions and the action of B_r on them.
 *
 * A series u(z) = sum_{n<=N} u_n z^{rn}/alpha_{rn}(gamma) is stored by its
 * normalized coefficients u_n. In this basis B_r is the exact backward
 * shift, so operator identities reduce to index bookkeeping; the raw
 * monomial coefficients c_n = u_n/alpha_{rn} remain recoverable exactly in
 * rational mode.
 *
 * Two independent realizations of B_r (shift and expanded coefficient form)
 * plus a quadrature realization of the integral form are provided for
 * cross-path testing, along with two-sided norm estimation on disks.
 */

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "hyperbessel/certificate.hpp"
#include "hyperbessel/numerics.hpp"
#include "hyperbessel/vector_index.hpp"

namespace hb {

inline constexpr long kDefaultTruncation = 64;

template <class Scalar>
class REvenSeries {
public:
    REvenSeries(VectorIndex vi, std::vector<Scalar> normalized_coeffs)
        : vi_(std::move(vi)), u_(std::move(normalized_coeffs)) {
        if (u_.empty()) u_.push_back(Scalar(0));
    }

    /// Zero series of the given truncation order.
    static REvenSeries zero(VectorIndex vi, long order = 0) {
        return REvenSeries(std::move(vi), std::vector<Scalar>(order + 1, Scalar(0)));
    }

    /// Basis element e_n(z) = z^{rn}/alpha_{rn}, padded to `order` (default n).
    static REvenSeries basis(VectorIndex vi, long n, long order = -1) {
        if (order < n) order = n;
        std::vector<Scalar> u(order + 1, Scalar(0));
        u[n] = Scalar(1);
        return REvenSeries(std::move(vi), std::move(u));
    }

    const VectorIndex& vi() const { return vi_; }
    long truncation() const { return static_cast<long>(u_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const { return u_; }

    const Scalar& coeff(long n) const {
        if (n < 0 || n > truncation()) throw ArgumentError("REvenSeries::coeff: index out of range");
        return u_[n];
    }
    Scalar coeff_or_zero(long n) const {
        return (n >= 0 && n <= truncation()) ? u_[n] : Scalar(0);
    }

    /// Raw monomial coefficients c_n = u_n / alpha_{rn}; exact in rational mode.
    std::vector<Scalar> raw_coefficients() const {
        AlphaTable table(vi_, truncation());
        std::vector<Scalar> c(u_.size());
        for (long n = 0; n <= truncation(); ++n)
            c[n] = ScalarTraits<Scalar>::mul_rational(u_[n], Rational(1) / table.value(n));
        return c;
    }

    /// Rebuilds a series from raw monomial coefficients.
    static REvenSeries from_raw(VectorIndex vi, const std::vector<Scalar>& c) {
        AlphaTable table(vi, static_cast<long>(c.size()) - 1);
        std::vector<Scalar> u(c.size());
        for (size_t n = 0; n < c.size(); ++n)
            u[n] = ScalarTraits<Scalar>::mul_rational(c[n], table.value(n));
        return REvenSeries(std::move(vi), std::move(u));
    }

    const std::optional<ExpTypeCertificate>& type_certificate() const { return cert_; }
    REvenSeries with_certificate(ExpTypeCertificate cert) const {
        REvenSeries out = *this;
        out.cert_ = cert;
        return out;
    }

    /// Truncated copy (coefficients above `order` dropped, or zero-padded up).
    REvenSeries truncated(long order) const {
        std::vector<Scalar> u(order + 1, Scalar(0));
        for (long n = 0; n <= std::min(order, truncation()); ++n) u[n] = u_[n];
        REvenSeries out(vi_, std::move(u));
        out.cert_ = cert_;
        return out;
    }

    friend bool operator==(const REvenSeries& a, const REvenSeries& b) {
        return a.vi_ == b.vi_ && a.u_ == b.u_;
    }

private:
    VectorIndex vi_;
    std::vector<Scalar> u_;
    std::optional<ExpTypeCertificate> cert_;
};

using SeriesQ = REvenSeries<QComplex>;
using SeriesD = REvenSeries<std::complex<double>>;

inline SeriesD to_floating(const SeriesQ& u) {
    std::vector<std::complex<double>> c(u.coefficients().size());
    for (size_t n = 0; n < c.size(); ++n) c[n] = to_complex(u.coefficients()[n]);
    SeriesD out(u.vi(), std::move(c));
    if (u.type_certificate()) out = out.with_certificate(*u.type_certificate());
    return out;
}

/// Polynomial equality: coefficients agree up to trailing zeros.
template <class Scalar>
bool coeff_equal(const REvenSeries<Scalar>& a, const REvenSeries<Scalar>& b) {
    if (a.vi() != b.vi()) return false;
    long n = std::max(a.truncation(), b.truncation());
    for (long k = 0; k <= n; ++k)
        if (!scalar_is_zero(a.coeff_or_zero(k) - b.coeff_or_zero(k))) return false;
    return true;
}

namespace detail {
template <class Scalar>
void require_same_vi(const REvenSeries<Scalar>& a, const REvenSeries<Scalar>& b) {
    if (a.vi() != b.vi()) throw ArgumentError("series operation: vector index mismatch");
}
} // namespace detail

template <class Scalar>
REvenSeries<Scalar> add(const REvenSeries<Scalar>& a, const REvenSeries<Scalar>& b) {
    detail::require_same_vi(a, b);
    long n = std::max(a.truncation(), b.truncation());
    std::vector<Scalar> u(n + 1);
    for (long k = 0; k <= n; ++k) u[k] = a.coeff_or_zero(k) + b.coeff_or_zero(k);
    return REvenSeries<Scalar>(a.vi(), std::move(u));
}

template <class Scalar>
REvenSeries<Scalar> scalar_mul(const Scalar& lambda, const REvenSeries<Scalar>& a) {
    std::vector<Scalar> u(a.coefficients());
    for (Scalar& x : u) x *= lambda;
    return REvenSeries<Scalar>(a.vi(), std::move(u));
}

template <class Scalar>
REvenSeries<Scalar> sub(const REvenSeries<Scalar>& a, const REvenSeries<Scalar>& b) {
    return add(a, scalar_mul(Scalar(-1), b));
}

/// Cauchy product on raw coefficients, re-normalized. In the normalized
/// basis this is the generalized-binomial convolution
///   (uv)_n = sum_{i+j=n} binom_gamma(n,i) u_i v_j.
template <class Scalar>
REvenSeries<Scalar> multiply(const REvenSeries<Scalar>& a, const REvenSeries<Scalar>& b,
                             long cap = kDefaultTruncation) {
    detail::require_same_vi(a, b);
    long n_out = std::min(a.truncation() + b.truncation(), cap);
    AlphaTable table(a.vi(), n_out);
    std::vector<Scalar> w(n_out + 1, Scalar(0));
    for (long n = 0; n <= n_out; ++n) {
        for (long i = std::max<long>(0, n - b.truncation()); i <= std::min(n, a.truncation()); ++i) {
            Scalar term = a.coeff(i) * b.coeff(n - i);
            w[n] += ScalarTraits<Scalar>::mul_rational(term, table.binomial(n, i));
        }
    }
    return REvenSeries<Scalar>(a.vi(), std::move(w));
}

/// B_r as the backward shift in the normalized basis; truncation drops by one.
template <class Scalar>
REvenSeries<Scalar> apply_br(const REvenSeries<Scalar>& u) {
    long n = u.truncation();
    if (n == 0) return REvenSeries<Scalar>::zero(u.vi(), 0);
    std::vector<Scalar> out(n);
    for (long k = 0; k + 1 <= n; ++k) out[k] = u.coeff(k + 1);
    return REvenSeries<Scalar>(u.vi(), std::move(out));
}

/// B_r via the expanded coefficient form on raw coefficients:
/// contribution of c_n z^{rn} is c_n sum_k a_k (rn)_{r-k} z^{r(n-1)}.
/// Must equal apply_br exactly in rational mode.
template <class Scalar>
REvenSeries<Scalar> apply_br_raw(const REvenSeries<Scalar>& u, const BrCoefficients& br) {
    if (br.vi != u.vi()) throw ArgumentError("apply_br_raw: vector index mismatch");
    const int r = u.vi().r();
    long n = u.truncation();
    if (n == 0) return REvenSeries<Scalar>::zero(u.vi(), 0);
    AlphaTable table(u.vi(), n);
    std::vector<Scalar> out(n);
    for (long m = 1; m <= n; ++m) {
        Rational s = falling_factorial(Rational(r) * m, r); // a_0 = 1 term
        for (int k = 1; k <= r - 1; ++k)
            s += br.coefficient(k) * falling_factorial(Rational(r) * m, r - k);
        // raw c_m = u_m/alpha_{rm}; result raw coefficient at index m-1 is c_m*s,
        // renormalized with alpha_{r(m-1)}.
        Rational factor = table.value(m - 1) * s / table.value(m);
        out[m - 1] = ScalarTraits<Scalar>::mul_rational(u.coeff(m), factor);
    }
    return REvenSeries<Scalar>(u.vi(), std::move(out));
}

// ---------------------------------------------------------------------------
// Floating-point evaluation and norm estimation
// ---------------------------------------------------------------------------

struct EvalResult {
    std::complex<double> value;
    /// Tail bound sum_{n>N} |z|^{rn}/(rn)!, attached when every normalized
    /// coefficient satisfies |u_n| <= 1 (then |c_n| <= 1/alpha_{rn} and the
    /// factorial majorant is valid).
    std::optional<double> tail_bound;
};

namespace detail {
inline std::vector<std::complex<double>> raw_coefficients_d(const SeriesD& u) {
    AlphaTable table(u.vi(), u.truncation());
    std::vector<std::complex<double>> c(u.coefficients().size());
    for (long n = 0; n <= u.truncation(); ++n)
        c[n] = u.coeff(n) * to_double(Rational(1) / table.value(n));
    return c;
}
} // namespace detail

/// Horner evaluation in the variable z^r over raw coefficients.
inline EvalResult eval(const SeriesD& u, std::complex<double> z) {
    auto c = detail::raw_coefficients_d(u);
    std::complex<double> zr = std::pow(z, u.vi().r());
    std::complex<double> acc = 0.0;
    for (long n = u.truncation(); n >= 0; --n) acc = acc * zr + c[n];
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) {
        // locate the first term that overflows for the diagnostic
        double azr = std::abs(zr), pw = 1.0;
        for (long n = 0; n <= u.truncation(); ++n) {
            if (!std::isfinite(std::abs(c[n]) * pw))
                throw OverflowError("eval: series term overflows at index " + std::to_string(n), n);
            pw *= azr;
            if (!std::isfinite(pw))
                throw OverflowError("eval: power overflows at index " + std::to_string(n + 1), n + 1);
        }
        throw OverflowError("eval: accumulated value overflows", u.truncation());
    }
    EvalResult res{acc, std::nullopt};
    bool dominated = true;
    for (const auto& un : u.coefficients())
        if (std::abs(un) > 1.0 + 1e-15) { dominated = false; break; }
    if (dominated) res.tail_bound = exp_r_tail(std::abs(z), u.vi().r(), u.truncation());
    return res;
}

inline EvalResult eval(const SeriesQ& u, std::complex<double> z) { return eval(to_floating(u), z); }

/// Exact-scalar evaluation (rational z stays rational).
template <class Scalar>
Scalar eval_scalar(const REvenSeries<Scalar>& u, const Scalar& z) {
    auto c = u.raw_coefficients();
    Scalar zr = scalar_pow(z, u.vi().r());
    Scalar acc(0);
    for (long n = u.truncation(); n >= 0; --n) acc = acc * zr + c[n];
    return acc;
}

/// Evaluates u^{(r)} at w from raw coefficients (used by the integral form).
inline std::complex<double> eval_derivative_r(const SeriesD& u, std::complex<double> w) {
    const int r = u.vi().r();
    long n = u.truncation();
    if (n == 0) return 0.0;
    AlphaTable table(u.vi(), n);
    // coefficient of w^{r(m-1)} is u_m * (rm)_r / alpha_{rm}
    std::vector<std::complex<double>> d(n);
    for (long m = 1; m <= n; ++m) {
        Rational f = falling_factorial(Rational(r) * m, r) / table.value(m);
        d[m - 1] = u.coeff(m) * to_double(f);
    }
    std::complex<double> wr = std::pow(w, r), acc = 0.0;
    for (long m = n - 1; m >= 0; --m) acc = acc * wr + d[m];
    return acc;
}

/// B_r u(z) through the integral representation
///   u^{(r)}(z) + sum_k a_k/(k-1)! int_0^1 (1-t)^{k-1} u^{(r)}(tz) dt
/// with fixed-order Gauss-Legendre; orders 32 and 64 must agree or a
/// QuadratureError is raised.
inline std::complex<double> apply_br_integral(const SeriesD& u, std::complex<double> z,
                                              double check_tol = 1e-8) {
    const BrCoefficients br = derive_br_coefficients(u.vi());
    const int r = u.vi().r();
    auto value_at_order = [&](auto order_tag) {
        using G = decltype(order_tag);
        std::complex<double> acc = eval_derivative_r(u, z);
        double kfact = 1.0; // (k-1)!
        for (int k = 1; k <= r - 1; ++k) {
            if (k >= 2) kfact *= (k - 1);
            auto integrand = [&](double t) {
                return std::pow(1.0 - t, k - 1) * eval_derivative_r(u, t * z);
            };
            acc += to_double(br.coefficient(k)) / kfact * G::integrate(integrand, 0.0, 1.0);
        }
        return acc;
    };
    std::complex<double> v32 = value_at_order(boost::math::quadrature::gauss<double, 32>());
    std::complex<double> v64 = value_at_order(boost::math::quadrature::gauss<double, 64>());
    if (!std::isfinite(std::abs(v32)) || !std::isfinite(std::abs(v64)))
        throw OverflowError("apply_br_integral: integrand overflows", u.truncation());
    double scale = std::max({1.0, std::abs(v32), std::abs(v64)});
    if (std::abs(v32 - v64) > check_tol * scale)
        throw QuadratureError("apply_br_integral: Gauss-Legendre orders 32/64 disagree by " +
                              fmt17(std::abs(v32 - v64) / scale));
    return v64;
}

/// Upper bound sum |c_n| R^{rn} on the sup of |u| over |z| <= R.
inline double norm_majorant(const SeriesD& u, double radius) {
    if (!(radius > 0)) throw ArgumentError("norm_majorant: radius must be positive");
    auto c = detail::raw_coefficients_d(u);
    double rr = std::pow(radius, u.vi().r());
    double acc = 0.0, pw = 1.0;
    for (long n = 0; n <= u.truncation(); ++n) {
        acc += std::abs(c[n]) * pw;
        pw *= rr;
    }
    return acc;
}
inline double norm_majorant(const SeriesQ& u, double radius) {
    return norm_majorant(to_floating(u), radius);
}

/// Lower bound: max |u| over m equispaced points of the circle |z| = R.
/// Nested grids (m | m') are monotone; the true sup-norm sits between this
/// and norm_majorant.
inline double norm_grid(const SeriesD& u, double radius, int m = 64) {
    if (!(radius > 0)) throw ArgumentError("norm_grid: radius must be positive");
    if (m < 1) throw ArgumentError("norm_grid: grid size must be >= 1");
    double best = 0.0;
    for (int j = 0; j < m; ++j) {
        double th = 2.0 * std::numbers::pi * j / m;
        std::complex<double> z = radius * std::complex<double>(std::cos(th), std::sin(th));
        best = std::max(best, std::abs(eval(u, z).value));
    }
    return best;
}
inline double norm_grid(const SeriesQ& u, double radius, int m = 64) {
    return norm_grid(to_floating(u), radius, m);
}

/// One instance of the iterate bound ||B_r^n u||_R <= M^n (nr)!/R^{nr} ||u||_{2R},
/// tested in the direction the two-sided estimates make sound: grid lower
/// bound on the left, majorant upper bound on the right.
struct BrNormReport {
    double lhs; // grid norm of B_r^n u on |z| = R
    double rhs; // M^n (nr)!/R^{nr} * majorant of u on |z| = 2R
    bool pass;
};

inline BrNormReport br_power_norm_check(const SeriesD& u, double radius, int n, int grid_m = 64) {
    if (n < 0) throw ArgumentError("br_power_norm_check: n must be >= 0");
    SeriesD v = u;
    for (int i = 0; i < n; ++i) v = apply_br(v);
    double lhs = norm_grid(v, radius, grid_m);
    const BrCoefficients br = derive_br_coefficients(u.vi());
    double rhs = std::pow(to_double(br.M), n) * factorial_double(static_cast<long>(n) * u.vi().r()) /
                 std::pow(radius, static_cast<double>(n) * u.vi().r()) *
                 norm_majorant(u, 2.0 * radius);
    return BrNormReport{lhs, rhs, lhs <= rhs};
}

} // namespace hb
