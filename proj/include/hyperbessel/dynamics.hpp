#pragma once

/**
 * @file dynamics.hpp
 * @brief Convolution operators Phi(B_r), their eigen-symbol
 *        Psi(lambda) = Phi(e^{i pi/r} lambda), periodic-point search, and
 *        numerical transitivity witnesses.
 *
 * Every j_gamma(lambda .) is an eigenfunction of Phi(B_r) with eigenvalue
 * Psi(lambda). Chaos is witnessed, never proven: the certificate collects
 * eigenvalue samples with |Psi| on both sides of 1, located periodic points
 * with verified orbit residuals, and one explicit transitivity step
 * u ~ h, Phi(B_r)^N u ~ g with both residuals below tolerance.
 */

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbessel/fourier.hpp"
#include "hyperbessel/functional.hpp"
#include "hyperbessel/least_squares.hpp"
#include "hyperbessel/parallel.hpp"
#include "hyperbessel/series.hpp"
#include "hyperbessel/special.hpp"

namespace hb {

/// Operator Phi(B_r) = sum_n (b_n/alpha_{rn}) B_r^n with symbol
/// Phi(z) = sum b_n z^{rn}/alpha_{rn} stored to finite length K.
template <class Scalar>
class ConvolutionOperator {
public:
    ConvolutionOperator(VectorIndex vi, std::vector<Scalar> symbol,
                        std::optional<ExpTypeCertificate> certificate = std::nullopt)
        : vi_(std::move(vi)), b_(std::move(symbol)) {
        if (b_.empty()) b_.push_back(Scalar(0));
        if (certificate) {
            cert_ = *certificate;
        } else {
            // pad to the fitter's minimum length; zeros do not affect the fit
            REvenSeries<Scalar> padded(vi_, b_);
            cert_ = exp_type_fit(padded.truncated(std::max<long>(8, symbol_truncation()))).certificate;
        }
    }

    const VectorIndex& vi() const { return vi_; }
    long symbol_truncation() const { return static_cast<long>(b_.size()) - 1; }
    const std::vector<Scalar>& symbol() const { return b_; }
    const ExpTypeCertificate& certificate() const { return cert_; }

    /// True when only b_0 can be nonzero: a scalar multiple of the identity.
    bool is_scalar() const {
        for (long n = 1; n <= symbol_truncation(); ++n)
            if (!scalar_is_zero(b_[n])) return false;
        return true;
    }

    /// L = B_r, symbol Phi(z) = z^r (normalized coefficient alpha_r at n=1).
    static ConvolutionOperator br(const VectorIndex& vi) {
        std::vector<Scalar> b(2, Scalar(0));
        b[1] = ScalarTraits<Scalar>::from_rational(alpha(vi, 1));
        return ConvolutionOperator(vi, std::move(b));
    }

    /// L = c * identity.
    static ConvolutionOperator identity(const VectorIndex& vi, const Scalar& scale = Scalar(1)) {
        return ConvolutionOperator(vi, std::vector<Scalar>{scale});
    }

    /// L = T_a, the Delsarte translation by a; symbol G_gamma(a .),
    /// b_n = a^{rn}, stored to length K.
    static ConvolutionOperator translation(const VectorIndex& vi, const Scalar& a, long k_trunc) {
        std::vector<Scalar> b(k_trunc + 1);
        Scalar ar = scalar_pow(a, vi.r());
        b[0] = Scalar(1);
        for (long n = 1; n <= k_trunc; ++n) b[n] = b[n - 1] * ar;
        return ConvolutionOperator(vi, std::move(b));
    }

    friend bool operator==(const ConvolutionOperator& a, const ConvolutionOperator& b) {
        return a.vi_ == b.vi_ && a.b_ == b.b_;
    }

private:
    VectorIndex vi_;
    std::vector<Scalar> b_;
    ExpTypeCertificate cert_;
};

using OperatorQ = ConvolutionOperator<QComplex>;
using OperatorD = ConvolutionOperator<std::complex<double>>;

inline OperatorD to_floating(const OperatorQ& op) {
    std::vector<std::complex<double>> b(op.symbol().size());
    for (size_t n = 0; n < b.size(); ++n) b[n] = to_complex(op.symbol()[n]);
    return OperatorD(op.vi(), std::move(b), op.certificate());
}

/// L u with the shift representation,
///   result_m = sum_{n <= min(K, N-m)} (b_n/alpha_{rn}) u_{m+n}.
/// The operand's truncation N is kept: the output is the exact action of L
/// on the truncated polynomial. Coefficients at m > N - K would receive
/// further contributions from an infinite-series operand; use
/// apply_trimmed/apply_power when that window semantics is wanted.
template <class Scalar>
REvenSeries<Scalar> apply(const ConvolutionOperator<Scalar>& op, const REvenSeries<Scalar>& u) {
    if (op.vi() != u.vi()) throw ArgumentError("apply: vector index mismatch");
    const long n_max = u.truncation();
    const long k = op.symbol_truncation();
    AlphaTable table(op.vi(), std::min(k, n_max));
    std::vector<Scalar> w(std::min(k, n_max) + 1);
    for (long n = 0; n < static_cast<long>(w.size()); ++n)
        w[n] = ScalarTraits<Scalar>::mul_rational(op.symbol()[n], Rational(1) / table.value(n));
    std::vector<Scalar> out(n_max + 1, Scalar(0));
    for (long m = 0; m <= n_max; ++m) {
        long top = std::min(k, n_max - m);
        for (long n = 0; n <= top; ++n) out[m] += w[n] * u.coeff(m + n);
    }
    return REvenSeries<Scalar>(u.vi(), std::move(out));
}

/// Applies L and keeps only the window of coefficients that an
/// infinite-series operand could not change (truncation N - K).
template <class Scalar>
REvenSeries<Scalar> apply_trimmed(const ConvolutionOperator<Scalar>& op,
                                  const REvenSeries<Scalar>& u) {
    const long n_out = u.truncation() - op.symbol_truncation();
    if (n_out < 0)
        throw ArgumentError("apply_trimmed: truncation window exhausted (N < K)");
    return apply(op, u).truncated(n_out);
}

/// L^p by repeated application, trimming the window each step. The operand
/// must carry p*K spare coefficients.
template <class Scalar>
REvenSeries<Scalar> apply_power(const ConvolutionOperator<Scalar>& op, REvenSeries<Scalar> u,
                                long p) {
    if (p < 0) throw ArgumentError("apply_power: negative power");
    for (long i = 0; i < p; ++i) u = apply_trimmed(op, u);
    return u;
}

/// Round trips with the moment representation: b_n = t_n both ways.
template <class Scalar>
ConvolutionOperator<Scalar> from_functional(const MomentFunctional<Scalar>& f) {
    std::optional<ExpTypeCertificate> cert;
    if (f.certificate()) cert = *f.certificate();
    return ConvolutionOperator<Scalar>(f.vi(), f.moments(), cert);
}

template <class Scalar>
MomentFunctional<Scalar> to_functional(const ConvolutionOperator<Scalar>& op) {
    return MomentFunctional<Scalar>(op.vi(), op.symbol(), op.certificate());
}

/// Psi(lambda) = Phi(e^{i pi/r} lambda) = sum b_n (-lambda^r)^n / alpha_{rn},
/// the eigenvalue of L on j_gamma(lambda .).
template <class Scalar>
std::complex<double> symbol_eigenvalue(const ConvolutionOperator<Scalar>& op,
                                       std::complex<double> lambda) {
    const long k = op.symbol_truncation();
    AlphaTable table(op.vi(), k);
    std::complex<double> mu = -std::pow(lambda, op.vi().r());
    std::complex<double> acc = 0.0;
    for (long n = k; n >= 0; --n) {
        acc = acc * mu + to_complex(op.symbol()[n]) * to_double(Rational(1) / table.value(n));
    }
    return acc;
}

/// d Psi / d lambda by term-wise differentiation of the symbol series.
template <class Scalar>
std::complex<double> symbol_eigenvalue_derivative(const ConvolutionOperator<Scalar>& op,
                                                  std::complex<double> lambda) {
    const long k = op.symbol_truncation();
    const int r = op.vi().r();
    AlphaTable table(op.vi(), k);
    std::complex<double> mu = -std::pow(lambda, r);
    std::complex<double> mu_pow = 1.0; // mu^{n-1}
    std::complex<double> front = -static_cast<double>(r) * std::pow(lambda, r - 1);
    std::complex<double> acc = 0.0;
    for (long n = 1; n <= k; ++n) {
        acc += to_complex(op.symbol()[n]) * to_double(Rational(1) / table.value(n)) *
               static_cast<double>(n) * mu_pow;
        mu_pow *= mu;
    }
    return acc * front;
}

// ---------------------------------------------------------------------------
// Godefroy-Shapiro ingredients
// ---------------------------------------------------------------------------

struct GsSample {
    std::complex<double> lambda;
    std::complex<double> psi;
};

struct GsGrid {
    double radius_min = 0.25;
    double radius_max = 4.0;
    int moduli = 10;
    int angles = 24;
    int max_enlargements = 2;
};

struct GsScanResult {
    std::vector<GsSample> a_samples; // |Psi| < 1, sorted by ascending |Psi|
    std::vector<GsSample> b_samples; // |Psi| > 1, sorted by descending |Psi|
    bool is_scalar = false;
};

namespace detail {

inline std::vector<std::complex<double>> polar_grid(const GsGrid& g) {
    std::vector<std::complex<double>> pts;
    pts.reserve(static_cast<size_t>(g.moduli) * g.angles);
    for (int i = 0; i < g.moduli; ++i) {
        double rad = g.moduli == 1
                         ? g.radius_min
                         : g.radius_min * std::pow(g.radius_max / g.radius_min,
                                                   static_cast<double>(i) / (g.moduli - 1));
        for (int j = 0; j < g.angles; ++j) {
            double th = 2.0 * std::numbers::pi * j / g.angles;
            pts.emplace_back(rad * std::cos(th), rad * std::sin(th));
        }
    }
    return pts;
}

/// j_gamma(lambda .) depends on lambda only through lambda^r; keep one
/// representative per eigenfunction.
inline void dedupe_by_lambda_power(std::vector<GsSample>& v, int r, double tol = 1e-10) {
    std::vector<GsSample> out;
    std::vector<std::complex<double>> seen;
    for (const auto& s : v) {
        std::complex<double> p = std::pow(s.lambda, r);
        bool dup = false;
        for (const auto& q : seen)
            if (std::abs(p - q) <= tol * std::max(1.0, std::abs(q))) { dup = true; break; }
        if (!dup) {
            seen.push_back(p);
            out.push_back(s);
        }
    }
    v = std::move(out);
}

} // namespace detail

/// Samples Psi over a polar grid and returns representatives of
/// A = {|Psi| < 1} and B = {|Psi| > 1}. Scalar operators are flagged and
/// return empty sample sets. If a nonscalar symbol yields an empty side,
/// the grid is enlarged a bounded number of times and then the scan fails
/// loudly rather than pass silently.
template <class Scalar>
GsScanResult gs_scan(const ConvolutionOperator<Scalar>& op, GsGrid grid = {}) {
    GsScanResult res;
    if (op.is_scalar()) {
        res.is_scalar = true;
        return res;
    }
    for (int attempt = 0; attempt <= grid.max_enlargements; ++attempt) {
        auto pts = detail::polar_grid(grid);
        std::vector<std::complex<double>> psi(pts.size());
        parallel_for(static_cast<long>(pts.size()),
                     [&](long i) { psi[i] = symbol_eigenvalue(op, pts[i]); });
        res.a_samples.clear();
        res.b_samples.clear();
        for (size_t i = 0; i < pts.size(); ++i) {
            double m = std::abs(psi[i]);
            if (m < 1.0 - 1e-9)
                res.a_samples.push_back({pts[i], psi[i]});
            else if (m > 1.0 + 1e-9)
                res.b_samples.push_back({pts[i], psi[i]});
        }
        auto by_lambda = [](const GsSample& x, const GsSample& y) {
            double ax = std::abs(x.lambda), ay = std::abs(y.lambda);
            if (ax != ay) return ax < ay;
            return std::arg(x.lambda) < std::arg(y.lambda);
        };
        std::sort(res.a_samples.begin(), res.a_samples.end(), [&](const auto& x, const auto& y) {
            double mx = std::abs(x.psi), my = std::abs(y.psi);
            if (mx != my) return mx < my;
            return by_lambda(x, y);
        });
        std::sort(res.b_samples.begin(), res.b_samples.end(), [&](const auto& x, const auto& y) {
            double mx = std::abs(x.psi), my = std::abs(y.psi);
            if (mx != my) return mx > my;
            return by_lambda(x, y);
        });
        detail::dedupe_by_lambda_power(res.a_samples, op.vi().r());
        detail::dedupe_by_lambda_power(res.b_samples, op.vi().r());
        if (!res.a_samples.empty() && !res.b_samples.empty()) return res;
        grid.radius_min *= 0.5;
        grid.radius_max *= 2.0;
        grid.moduli += grid.moduli / 2;
    }
    throw GridSearchError("gs_scan: could not populate both |Psi|<1 and |Psi|>1 after grid "
                          "enlargement; enlarge the grid explicitly");
}

struct PeriodicPointRecord {
    std::complex<double> lambda;
    long period;
    double newton_residual;
    double orbit_residual = -1.0; // filled by verify_periodic when run
};

/// Smallest n >= 1 with (e^{i pi alpha})^n = 1 for rational alpha = p/q.
inline long rotation_period(const Rational& alpha) {
    if (alpha == 0) return 1;
    Integer p = numerator(alpha), q = denominator(alpha);
    Integer twoq = 2 * q;
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(p), twoq);
    return (twoq / g).convert_to<long>();
}

/// Newton iteration on Psi(lambda) - e^{i pi alpha} from the given seeds;
/// converged roots are deduped by lambda^r. Roots come back sorted by
/// modulus then argument for reproducibility.
template <class Scalar>
std::vector<PeriodicPointRecord> periodic_point_find(const ConvolutionOperator<Scalar>& op,
                                                     const Rational& alpha,
                                                     const std::vector<std::complex<double>>& seeds,
                                                     double tol = 1e-12, int max_iter = 50) {
    if (op.is_scalar())
        throw ArgumentError("periodic_point_find: scalar multiples of the identity are excluded");
    const double pi_alpha = std::numbers::pi * to_double(alpha);
    const std::complex<double> target(std::cos(pi_alpha), std::sin(pi_alpha));
    const long period = rotation_period(alpha);

    std::vector<PeriodicPointRecord> found;
    for (const auto& seed : seeds) {
        std::complex<double> x = seed;
        bool converged = false;
        double resid = 0.0;
        for (int it = 0; it < max_iter; ++it) {
            std::complex<double> f = symbol_eigenvalue(op, x) - target;
            resid = std::abs(f);
            if (resid <= tol) { converged = true; break; }
            std::complex<double> df = symbol_eigenvalue_derivative(op, x);
            if (!(std::abs(df) > 0.0)) break;
            x -= f / df;
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) break;
        }
        if (!converged) continue;
        std::complex<double> xp = std::pow(x, op.vi().r());
        bool dup = false;
        for (const auto& rec : found) {
            if (std::abs(std::pow(rec.lambda, op.vi().r()) - xp) <= 1e-8) { dup = true; break; }
        }
        if (!dup) found.push_back({x, period, resid});
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        double ma = std::abs(a.lambda), mb = std::abs(b.lambda);
        if (ma != mb) return ma < mb;
        return std::arg(a.lambda) < std::arg(b.lambda);
    });
    return found;
}

/// Grid norm on |z| <= 1 of L^n j_lambda - j_lambda at matched truncation.
template <class Scalar>
double verify_periodic(const ConvolutionOperator<Scalar>& op, std::complex<double> lambda, long n,
                       long base_truncation = kDefaultTruncation, int grid_m = 32) {
    if (n < 1) throw ArgumentError("verify_periodic: period must be >= 1");
    OperatorD opd = [&] {
        if constexpr (ScalarTraits<Scalar>::exact) return to_floating(op);
        else return op;
    }();
    long n_big = base_truncation + n * opd.symbol_truncation();
    SeriesD u = j_series(opd.vi(), lambda, n_big);
    SeriesD v = apply_power(opd, u, n);
    SeriesD ref = j_series(opd.vi(), lambda, v.truncation());
    return norm_grid(sub(v, ref), 1.0, grid_m);
}

// ---------------------------------------------------------------------------
// Transitivity witness
// ---------------------------------------------------------------------------

struct TransitivityRecord {
    SeriesD witness;
    double epsilon;
    double radius;
    long iterates;
    double residual_start; // grid norm of u - h on |z| <= R
    double residual_end;   // grid norm of L^N u - g on |z| <= R
    int nodes_per_set;
};

struct TransitivityOptions {
    int nodes = 16;
    int max_nodes = 128;
    int ls_radii = 4;
    int ls_angles = 16;
    int check_radii = 6;
    int check_angles = 24;
    double ridge = 1e-12;
    GsGrid grid;
};

/// One Godefroy-Shapiro transitivity step: finds
///   u = sum c_i j_{lambda_i} + sum d_j Psi(mu_j)^{-N} j_{mu_j}
/// with lambda-nodes from A = {|Psi|<1} and mu-nodes from B = {|Psi|>1},
/// minimizing |u - h| and |L^N u - g| jointly on a grid of |z| <= R. The
/// returned residuals are re-verified by honestly iterating the operator on
/// the witness series, not through the eigenvalue shortcut.
template <class Scalar>
TransitivityRecord transitivity_witness(const ConvolutionOperator<Scalar>& op, const SeriesD& h,
                                        const SeriesD& g, double epsilon, double radius,
                                        long iterates, TransitivityOptions opts = {}) {
    if (!(epsilon > 0)) throw ArgumentError("transitivity_witness: epsilon must be positive");
    if (iterates < 1) throw ArgumentError("transitivity_witness: need at least one iterate");
    OperatorD opd = [&] {
        if constexpr (ScalarTraits<Scalar>::exact) return to_floating(op);
        else return op;
    }();
    if (h.vi() != opd.vi() || g.vi() != opd.vi())
        throw ArgumentError("transitivity_witness: vector index mismatch");

    GsScanResult scan = gs_scan(opd, opts.grid);
    if (scan.is_scalar)
        throw ArgumentError("transitivity_witness: scalar multiples of the identity are excluded");

    auto ls_grid = detail::disk_grid(radius, opts.ls_radii, opts.ls_angles);
    auto check_grid = detail::disk_grid(radius, opts.check_radii, opts.check_angles);

    double best_start = -1.0, best_end = -1.0;
    for (int nodes = opts.nodes; nodes <= opts.max_nodes; nodes *= 2) {
        const long na = std::min<long>(nodes, static_cast<long>(scan.a_samples.size()));
        const long nb = std::min<long>(nodes, static_cast<long>(scan.b_samples.size()));
        std::vector<std::complex<double>> lam(na), mu(nb), psi_lam_n(na), psi_mu_inv_n(nb);
        for (long i = 0; i < na; ++i) {
            lam[i] = scan.a_samples[i].lambda;
            psi_lam_n[i] = std::pow(scan.a_samples[i].psi, static_cast<double>(iterates));
        }
        for (long j = 0; j < nb; ++j) {
            mu[j] = scan.b_samples[j].lambda;
            psi_mu_inv_n[j] = std::pow(scan.b_samples[j].psi, -static_cast<double>(iterates));
        }

        const long rows = 2 * static_cast<long>(ls_grid.size());
        Eigen::MatrixXcd a(rows, na + nb);
        Eigen::VectorXcd b(rows);
        parallel_for(static_cast<long>(ls_grid.size()), [&](long t) {
            const std::complex<double> z = ls_grid[t];
            const long t2 = t + static_cast<long>(ls_grid.size());
            for (long i = 0; i < na; ++i) {
                std::complex<double> jv = j_eval(opd.vi(), lam[i] * z, 1e-14).value;
                a(t, i) = jv;
                a(t2, i) = psi_lam_n[i] * jv;
            }
            for (long j = 0; j < nb; ++j) {
                std::complex<double> jv = j_eval(opd.vi(), mu[j] * z, 1e-14).value;
                a(t, na + j) = psi_mu_inv_n[j] * jv;
                a(t2, na + j) = jv;
            }
            b(t) = eval(h, z).value;
            b(t2) = eval(g, z).value;
        });
        auto ls = solve_least_squares(a, b, opts.ridge);

        // assemble the witness with enough spare coefficients for N honest
        // applications of the K-term symbol
        const long n_eval = std::max<long>({kDefaultTruncation, h.truncation(), g.truncation()});
        const long n_big = n_eval + iterates * opd.symbol_truncation();
        SeriesD u = SeriesD::zero(opd.vi(), n_big);
        for (long i = 0; i < na; ++i)
            u = add(u, scalar_mul(std::complex<double>(ls.x(i)), j_series(opd.vi(), lam[i], n_big)));
        for (long j = 0; j < nb; ++j)
            u = add(u, scalar_mul(std::complex<double>(ls.x(na + j)) * psi_mu_inv_n[j],
                                  j_series(opd.vi(), mu[j], n_big)));

        double res_start = 0.0;
        for (const auto& z : check_grid)
            res_start = std::max(res_start, std::abs(eval(u, z).value - eval(h, z).value));
        SeriesD w = apply_power(opd, u, iterates);
        double res_end = 0.0;
        for (const auto& z : check_grid)
            res_end = std::max(res_end, std::abs(eval(w, z).value - eval(g, z).value));

        if (best_start < 0 || std::max(res_start, res_end) < std::max(best_start, best_end)) {
            best_start = res_start;
            best_end = res_end;
        }
        if (res_start < epsilon && res_end < epsilon) {
            return TransitivityRecord{u.truncated(n_eval), epsilon,  radius, iterates,
                                      res_start,           res_end, nodes};
        }
    }
    throw WitnessFailureError("transitivity_witness: residuals " + fmt17(best_start) + " / " +
                                  fmt17(best_end) + " did not reach epsilon = " + fmt17(epsilon),
                              best_start, best_end);
}

// ---------------------------------------------------------------------------
// Certificate assembly
// ---------------------------------------------------------------------------

struct ChaosCertificate {
    OperatorD op;
    bool refusal = false;
    std::string refusal_reason;
    std::vector<GsSample> a_samples;
    std::vector<GsSample> b_samples;
    std::vector<std::pair<Rational, std::vector<PeriodicPointRecord>>> periodic_points;
    std::optional<TransitivityRecord> transitivity;
    double newton_tol = 1e-12;
    double orbit_tol = 1e-8;
};

struct CertifyConfig {
    GsGrid grid;
    std::vector<Rational> alphas = {Rational(0), Rational(1), Rational(1, 2)};
    TransitivityOptions transitivity;
    std::optional<SeriesD> h; // defaults to e_0
    std::optional<SeriesD> g; // defaults to e_1
    double epsilon = 1e-3;
    double radius = 1.0;
    long iterates = 12;
    double newton_tol = 1e-12;
    double orbit_tol = 1e-8;
    int max_stored_samples = 64;
};

/// Runs the scan, the periodic-point search over the configured rational
/// rotation numbers, and the transitivity witness; assembles everything into
/// a certificate. Scalar multiples of the identity yield a refusal record
/// (they are exactly the operators the chaos statement excludes).
template <class Scalar>
ChaosCertificate certify(const ConvolutionOperator<Scalar>& op, const CertifyConfig& cfg = {}) {
    OperatorD opd = [&] {
        if constexpr (ScalarTraits<Scalar>::exact) return to_floating(op);
        else return op;
    }();
    ChaosCertificate cert{opd};
    cert.newton_tol = cfg.newton_tol;
    cert.orbit_tol = cfg.orbit_tol;
    if (opd.is_scalar()) {
        cert.refusal = true;
        cert.refusal_reason = "operator is a scalar multiple of the identity";
        return cert;
    }

    GsScanResult scan = gs_scan(opd, cfg.grid);
    auto clip = [&](std::vector<GsSample> v) {
        if (static_cast<int>(v.size()) > cfg.max_stored_samples) v.resize(cfg.max_stored_samples);
        return v;
    };
    cert.a_samples = clip(scan.a_samples);
    cert.b_samples = clip(scan.b_samples);

    std::vector<std::complex<double>> seeds = detail::polar_grid(cfg.grid);
    for (const Rational& alpha : cfg.alphas) {
        auto roots = periodic_point_find(opd, alpha, seeds, cfg.newton_tol);
        std::vector<PeriodicPointRecord> kept;
        for (auto& rec : roots) {
            rec.orbit_residual = verify_periodic(opd, rec.lambda, rec.period);
            if (rec.orbit_residual <= cfg.orbit_tol) kept.push_back(rec);
        }
        cert.periodic_points.emplace_back(alpha, std::move(kept));
    }

    SeriesD h = cfg.h ? *cfg.h : SeriesD::basis(opd.vi(), 0);
    SeriesD g = cfg.g ? *cfg.g : SeriesD::basis(opd.vi(), 1);
    TransitivityOptions topts = cfg.transitivity;
    topts.grid = cfg.grid;
    cert.transitivity =
        transitivity_witness(opd, h, g, cfg.epsilon, cfg.radius, cfg.iterates, topts);
    return cert;
}

} // namespace hb
