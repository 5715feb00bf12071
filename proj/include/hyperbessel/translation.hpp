#pragma once

/**
 * @file translation.hpp
 * @brief Delsarte generalized translation, the generalized addition formula,
 *        and convolution of moment functionals with series.
 *
 * The translation T_z u = sum_n z^{rn}/alpha_{rn} B_r^n u is computed by two
 * independent routes: the shift route (Delsarte series) and the addition
 * route through generalized binomials. Both keep the operand's truncation N;
 * every output coefficient is then the exact translation of the truncated
 * polynomial, and the two routes agree exactly in rational mode. The terms
 * an infinite-series operand would additionally contribute are counted by
 * translate_dropped_terms.
 */

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "hyperbessel/functional.hpp"
#include "hyperbessel/numerics.hpp"
#include "hyperbessel/series.hpp"

namespace hb {

/// Delsarte route: result_m = sum_{n<=N-m} (z^{rn}/alpha_{rn}) u_{m+n}.
template <class Scalar>
REvenSeries<Scalar> translate_delsarte(const REvenSeries<Scalar>& u, const Scalar& z) {
    const long n_max = u.truncation();
    // zp[n] = z^{rn}/alpha_{rn}, built by the ratio law
    std::vector<Scalar> zp(n_max + 1);
    zp[0] = Scalar(1);
    Scalar zr = scalar_pow(z, u.vi().r());
    for (long n = 1; n <= n_max; ++n)
        zp[n] = ScalarTraits<Scalar>::mul_rational(zp[n - 1] * zr, Rational(1) / alpha_ratio(u.vi(), n));
    std::vector<Scalar> out(n_max + 1, Scalar(0));
    for (long m = 0; m <= n_max; ++m)
        for (long n = 0; n <= n_max - m; ++n) out[m] += zp[n] * u.coeff(m + n);
    return REvenSeries<Scalar>(u.vi(), std::move(out));
}

/// Count of coefficient contributions a depth-N truncation cannot determine
/// (the upper-triangular corner m + n > N).
inline long translate_dropped_terms(long n_trunc) { return n_trunc * (n_trunc + 1) / 2; }

/// (z (+) w)^{rn} = sum_k binom_gamma(n,k) w^{rk} z^{r(n-k)}.
template <class Scalar>
Scalar addition_power(const VectorIndex& vi, long n, const Scalar& z, const Scalar& w) {
    if (n < 0) throw ArgumentError("addition_power: n must be >= 0");
    AlphaTable table(vi, n);
    Scalar zr = scalar_pow(z, vi.r()), wr = scalar_pow(w, vi.r());
    // accumulate w^{rk} ascending and z^{r(n-k)} descending
    std::vector<Scalar> zpow(n + 1);
    zpow[0] = Scalar(1);
    for (long k = 1; k <= n; ++k) zpow[k] = zpow[k - 1] * zr;
    Scalar acc(0), wq(1);
    for (long k = 0; k <= n; ++k) {
        acc += ScalarTraits<Scalar>::mul_rational(wq * zpow[n - k], table.binomial(n, k));
        if (k < n) wq *= wr;
    }
    return acc;
}

inline std::complex<double> addition_power(const VectorIndex& vi, long n, std::complex<double> z,
                                           std::complex<double> w) {
    return addition_power<std::complex<double>>(vi, n, z, w);
}

/// Same quantity as the terminating hypergeometric sum
///   z^{rn} rF_{r-1}[-n, -(n+gamma_i); gamma_i+1 | (-w/z)^r],
/// i.e. sum_k [(-n)_k prod_i (-(n+gamma_i))_k] / [k! prod_i (gamma_i+1)_k] x^k.
inline std::complex<double> addition_power_hypergeometric(const VectorIndex& vi, long n,
                                                          std::complex<double> z,
                                                          std::complex<double> w) {
    if (n < 0) throw ArgumentError("addition_power_hypergeometric: n must be >= 0");
    if (z == std::complex<double>(0.0))
        throw ArgumentError("addition_power_hypergeometric: z = 0 (use addition_power)");
    std::complex<double> x = std::pow(-w / z, vi.r());
    std::complex<double> term = 1.0, acc = 1.0;
    for (long k = 0; k < n; ++k) {
        std::complex<double> ratio = std::complex<double>(static_cast<double>(-n + k));
        for (const Rational& g : vi.gamma())
            ratio *= -(static_cast<double>(n) + to_double(g)) + static_cast<double>(k);
        double denom = static_cast<double>(k + 1);
        for (const Rational& g : vi.gamma()) denom *= to_double(g) + 1.0 + static_cast<double>(k);
        term *= ratio / denom * x;
        acc += term;
    }
    return std::pow(z, vi.r() * n) * acc;
}

/// Addition route: expands u(z (+) w) collecting powers of w,
///   result_k = alpha_{rk} sum_{n>=k} c_n binom_gamma(n,k) z^{r(n-k)}.
/// Equals translate_delsarte exactly in rational mode.
template <class Scalar>
REvenSeries<Scalar> translate_addition(const REvenSeries<Scalar>& u, const Scalar& z) {
    const long n_max = u.truncation();
    AlphaTable table(u.vi(), n_max);
    auto c = u.raw_coefficients();
    Scalar zr = scalar_pow(z, u.vi().r());
    std::vector<Scalar> zpow(n_max + 1);
    zpow[0] = Scalar(1);
    for (long j = 1; j <= n_max; ++j) zpow[j] = zpow[j - 1] * zr;
    std::vector<Scalar> out(n_max + 1, Scalar(0));
    for (long k = 0; k <= n_max; ++k) {
        Scalar acc(0);
        for (long n = k; n <= n_max; ++n) {
            Rational f = table.binomial(n, k) * table.value(k);
            acc += ScalarTraits<Scalar>::mul_rational(c[n] * zpow[n - k], f);
        }
        out[k] = acc;
    }
    return REvenSeries<Scalar>(u.vi(), std::move(out));
}

namespace detail {

/// Truncated-scale stand-in for the pairing lemma's absolute-convergence
/// hypothesis: without a certificate, moments whose normalized size
/// |t_m|/alpha_{rm} still grows geometrically across the stored range
/// cannot pair with anything.
template <class Scalar>
void check_pairing_convergence(const MomentFunctional<Scalar>& f) {
    if (f.certificate()) return;
    AlphaTable table(f.vi(), f.max_index());
    std::vector<double> s(f.max_index() + 1);
    for (long m = 0; m <= f.max_index(); ++m)
        s[m] = std::abs(to_complex(f.moments()[m])) * to_double(Rational(1) / table.value(m));
    if (looks_superexponential(s, f.vi().r()))
        throw IncompletePairingError(
            "convolve: moment growth defeats the absolute-convergence test and no "
            "certificate is attached");
}

} // namespace detail

/// Generalized convolution (T * u)(z) = <T, T_z u>; in the normalized basis
///   (T * u)_n = sum_{m<=N-n} (t_m/alpha_{rm}) u_{n+m}.
/// Requires the stored moments to cover the operand's truncation.
template <class Scalar>
REvenSeries<Scalar> convolve(const MomentFunctional<Scalar>& f, const REvenSeries<Scalar>& u) {
    if (f.vi() != u.vi()) throw ArgumentError("convolve: vector index mismatch");
    const long n_max = u.truncation();
    if (f.max_index() < n_max)
        throw IncompletePairingError("convolve: functional stores " +
                                     std::to_string(f.max_index() + 1) + " moments but " +
                                     std::to_string(n_max + 1) + " are needed");
    detail::check_pairing_convergence(f);
    AlphaTable table(u.vi(), n_max);
    // weighted moments t_m / alpha_{rm}
    std::vector<Scalar> wm(n_max + 1);
    for (long m = 0; m <= n_max; ++m)
        wm[m] = ScalarTraits<Scalar>::mul_rational(f.moment(m), Rational(1) / table.value(m));
    std::vector<Scalar> out(n_max + 1, Scalar(0));
    for (long n = 0; n <= n_max; ++n)
        for (long m = 0; m <= n_max - n; ++m) out[n] += wm[m] * u.coeff(n + m);
    return REvenSeries<Scalar>(u.vi(), std::move(out));
}

/// Moment-level convolution (T * S)_n = sum_k binom_gamma(n,k) s_k t_{n-k}
/// (this is the defining duality applied to the monomials w^{rn} via the
/// addition formula). The composed growth certificate (C_T C_S, a_T + a_S)
/// is heuristic: it is re-inflated so it provably holds on the stored range
/// and marked as fitted.
template <class Scalar>
MomentFunctional<Scalar> moment_convolution(const MomentFunctional<Scalar>& t,
                                            const MomentFunctional<Scalar>& s) {
    if (t.vi() != s.vi()) throw ArgumentError("moment_convolution: vector index mismatch");
    const long n_max = std::min(t.max_index(), s.max_index());
    AlphaTable table(t.vi(), n_max);
    std::vector<Scalar> out(n_max + 1, Scalar(0));
    for (long n = 0; n <= n_max; ++n)
        for (long k = 0; k <= n; ++k)
            out[n] += ScalarTraits<Scalar>::mul_rational(s.moment(k) * t.moment(n - k),
                                                         table.binomial(n, k));

    std::optional<ExpTypeCertificate> cert;
    if (t.certificate() && s.certificate()) {
        double c = t.certificate()->C * s.certificate()->C;
        double a = t.certificate()->a + s.certificate()->a;
        // inflate C until it covers the stored range
        double need = 0.0, arn = 1.0;
        double ar = std::pow(a, t.vi().r());
        for (long n = 0; n <= n_max; ++n) {
            need = std::max(need, std::abs(to_complex(out[n])) / arn);
            arn *= ar;
        }
        c = std::max(c, need * (1.0 + 1e-12));
        cert = ExpTypeCertificate(c, a, ExpTypeCertificate::Source::fitted);
    }
    return MomentFunctional<Scalar>(t.vi(), std::move(out), cert);
}

/// B_r acting on a functional by transposition, <B_r T, u> = <T, B_r u>:
/// since B_r w^{rn} = (alpha_{rn}/alpha_{r(n-1)}) w^{r(n-1)}, the moments map
/// to (B_r T)_0 = 0, (B_r T)_n = (alpha_{rn}/alpha_{r(n-1)}) t_{n-1}. The
/// stored range grows by one (t_M still determines index M+1).
template <class Scalar>
MomentFunctional<Scalar> apply_br(const MomentFunctional<Scalar>& f) {
    const long m = f.max_index();
    std::vector<Scalar> out(m + 2, Scalar(0));
    for (long n = 1; n <= m + 1; ++n)
        out[n] = ScalarTraits<Scalar>::mul_rational(f.moment(n - 1), alpha_ratio(f.vi(), n));
    return MomentFunctional<Scalar>(f.vi(), std::move(out));
}

} // namespace hb
