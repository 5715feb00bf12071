#pragma once

/**
 * @file vector_index.hpp
 * @brief Exact combinatorial constants of the hyper-Bessel calculus.
 *
 * The operator B_r of order r with vector index gamma = (gamma_1..gamma_{r-1})
 * is governed by a family of rational constants:
 *
 *  - alpha_{rn}(gamma) = r^{rn} n! prod_i prod_{j<=n} (gamma_i + j),
 *    the normalizers of the Bessel function of vector index;
 *  - the coefficients a_1..a_{r-1} of the expanded form
 *    B_r = d^r/dz^r + sum_k a_k z^{-k} d^{r-k}/dz^{r-k};
 *  - M = 1 + sum_k |a_k|/k!, the growth constant of the iterate bound;
 *  - generalized binomials alpha_{rn}/(alpha_{rk} alpha_{r(n-k)}).
 *
 * Everything here is exact rational arithmetic over unbounded integers;
 * floating conversions happen at module boundaries only.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "hyperbessel/rational.hpp"

namespace hb {

/// The pair (r, gamma) parametrizing the calculus. Immutable after
/// construction; construction validates r >= 2 and the component bounds
/// gamma_k >= -1 + k/r (equality permitted).
class VectorIndex {
public:
    VectorIndex(int r, std::vector<Rational> gamma) : r_(r), gamma_(std::move(gamma)) {
        if (r_ < 2) throw ArgumentError("VectorIndex: order r must be >= 2");
        if (gamma_.size() != static_cast<size_t>(r_ - 1))
            throw ArgumentError("VectorIndex: gamma must have r-1 components");
        for (int k = 1; k < r_; ++k) {
            // gamma_k >= -1 + k/r  <=>  r*gamma_k + r - k >= 0
            if (Rational(r_) * gamma_[k - 1] + (r_ - k) < 0)
                throw ArgumentError("VectorIndex: gamma_" + std::to_string(k) +
                                    " below the admissible bound -1 + k/r");
        }
    }

    int r() const { return r_; }
    const std::vector<Rational>& gamma() const { return gamma_; }
    const Rational& gamma(int k) const { return gamma_.at(k - 1); } // 1-based

    /// w = e^{2 i pi / r}, the rotation under which r-even functions are invariant.
    std::complex<double> root_of_unity() const {
        double t = 2.0 * std::numbers::pi / r_;
        return {std::cos(t), std::sin(t)};
    }

    friend bool operator==(const VectorIndex& a, const VectorIndex& b) {
        return a.r_ == b.r_ && a.gamma_ == b.gamma_;
    }
    friend bool operator!=(const VectorIndex& a, const VectorIndex& b) { return !(a == b); }

private:
    int r_;
    std::vector<Rational> gamma_;
};

/// Index with gamma_k = -1 + k/r, for which B_r degenerates to d^r/dz^r
/// and alpha_{rn} = (rn)!.
inline VectorIndex derivative_index(int r) {
    std::vector<Rational> g;
    g.reserve(r - 1);
    for (int k = 1; k < r; ++k) g.emplace_back(Rational(k - r, r));
    return {r, std::move(g)};
}

/// alpha_{rn}(gamma) by the direct product formula, exact.
inline Rational alpha(const VectorIndex& vi, long n) {
    if (n < 0) throw ArgumentError("alpha: negative index");
    Rational out = rational_pow(Rational(vi.r()), vi.r() * n);
    for (long j = 2; j <= n; ++j) out *= j; // n!
    for (const Rational& g : vi.gamma())
        for (long j = 1; j <= n; ++j) out *= g + j;
    return out;
}

/// alpha_{rn}/alpha_{r(n-1)} = r^r * n * prod_i (gamma_i + n), exact. n >= 1.
inline Rational alpha_ratio(const VectorIndex& vi, long n) {
    if (n < 1) throw ArgumentError("alpha_ratio: index must be >= 1");
    Rational out = rational_pow(Rational(vi.r()), vi.r());
    out *= n;
    for (const Rational& g : vi.gamma()) out *= g + n;
    return out;
}

/// Table of alpha_{r*0}..alpha_{r*max_n}, built once by the ratio law.
class AlphaTable {
public:
    AlphaTable(VectorIndex vi, long max_n) : vi_(std::move(vi)) {
        values_.reserve(max_n + 1);
        values_.emplace_back(1);
        for (long n = 1; n <= max_n; ++n)
            values_.push_back(values_.back() * alpha_ratio(vi_, n));
    }

    /// Test hook: wraps externally supplied values without recomputation.
    static AlphaTable from_values(VectorIndex vi, std::vector<Rational> values) {
        AlphaTable t(std::move(vi), 0);
        t.values_ = std::move(values);
        return t;
    }

    const VectorIndex& vi() const { return vi_; }
    long max_n() const { return static_cast<long>(values_.size()) - 1; }

    const Rational& value(long n) const {
        if (n < 0 || n > max_n())
            throw ArgumentError("AlphaTable: index " + std::to_string(n) + " out of range");
        return values_[n];
    }

    /// alpha_{rn}/(alpha_{rk} alpha_{r(n-k)}).
    Rational binomial(long n, long k) const {
        if (k < 0 || k > n) throw ArgumentError("AlphaTable::binomial: k out of range");
        return value(n) / (value(k) * value(n - k));
    }

private:
    VectorIndex vi_;
    std::vector<Rational> values_;
};

inline Rational generalized_binomial(const VectorIndex& vi, long n, long k) {
    if (k < 0 || k > n) throw ArgumentError("generalized_binomial: k out of range");
    return AlphaTable(vi, n).binomial(n, k);
}

/// Falling factorial (m)(m-1)...(m-j+1); empty product for j = 0.
inline Rational falling_factorial(const Rational& m, int j) {
    Rational out = 1;
    for (int i = 0; i < j; ++i) out *= m - i;
    return out;
}

/// Expanded-form coefficients of B_r together with the iterate constant M.
/// closed_form_match[k-1] records whether the printed single-sum closed form
/// for a_k reproduces the system-derived value (it does not always; the
/// linear system below is the defining route).
struct BrCoefficients {
    VectorIndex vi;
    std::vector<Rational> a;             // a_1..a_{r-1}
    Rational M;                          // 1 + sum |a_k|/k!
    std::vector<bool> closed_form_match; // per coefficient

    const Rational& coefficient(int k) const { return a.at(k - 1); } // 1-based
};

/// Solves m * prod_i (m + r gamma_i) = sum_{k=0}^{r-1} a_k (m)_{r-k}, a_0 = 1,
/// at m = 1..r-1. The system is triangular in that order: at m exactly the
/// falling factorials with r-k <= m are nonzero and a_{r-m} enters with the
/// invertible pivot m!.
inline BrCoefficients derive_br_coefficients(const VectorIndex& vi) {
    const int r = vi.r();
    std::vector<Rational> a(r - 1, Rational(0)); // a[k-1] = a_k

    auto lhs = [&](long m) {
        Rational v(m);
        for (const Rational& g : vi.gamma()) v *= Rational(m) + Rational(r) * g;
        return v;
    };

    for (int m = 1; m <= r - 1; ++m) {
        Rational rhs_known = falling_factorial(Rational(m), r); // a_0 term, zero for m < r
        for (int k = r - m + 1; k <= r - 1; ++k)
            rhs_known += a[k - 1] * falling_factorial(Rational(m), r - k);
        Rational pivot = falling_factorial(Rational(m), m); // = m!
        a[r - m - 1] = (lhs(m) - rhs_known) / pivot;
    }

    Rational big_m(1);
    {
        Rational kfact(1);
        for (int k = 1; k <= r - 1; ++k) {
            kfact *= k;
            big_m += rational_abs(a[k - 1]) / kfact;
        }
    }

    // Cross-check against the printed closed form
    //   a_{r-k} = 1/(k-1)! sum_{j=1}^{k} (-1)^{k-j} C(j-1, k-1) prod_i (r gamma_i + j)
    // with the standard convention C(j-1, k-1) = 0 for j < k.
    std::vector<bool> match(r - 1, false);
    for (int k = 1; k <= r - 1; ++k) {
        Rational cf(0);
        for (int j = 1; j <= k; ++j) {
            if (j - 1 < k - 1) continue; // binomial vanishes
            Rational prod(1);
            for (const Rational& g : vi.gamma()) prod *= Rational(vi.r()) * g + j;
            Rational sign((k - j) % 2 == 0 ? 1 : -1);
            cf += sign * prod; // C(k-1, k-1) = 1
        }
        Rational km1fact(1);
        for (int i = 2; i <= k - 1; ++i) km1fact *= i;
        cf /= km1fact;
        match[(r - k) - 1] = (cf == a[(r - k) - 1]);
    }

    return BrCoefficients{vi, std::move(a), std::move(big_m), std::move(match)};
}

} // namespace hb
