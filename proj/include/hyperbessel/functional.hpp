#pragma once

/**
 * @file functional.hpp
 * @brief Dual-space elements represented by their moment sequences.
 *
 * A continuous functional T on the r-even entire functions is stored through
 * the moments t_n = <T, w^{rn}> plus an optional growth certificate
 * |t_n| <= C a^{rn}. The moments are the unique computable shadow of T; the
 * certificate is what the continuity estimate contributes.
 */

#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "hyperbessel/certificate.hpp"
#include "hyperbessel/rational.hpp"
#include "hyperbessel/vector_index.hpp"

namespace hb {

namespace detail {

// |t|^2 <= (C a^{rn})^2, exact in rational mode (doubles convert to
// rationals losslessly), small relative slack in floating mode.
inline bool certificate_holds(const QComplex& t, const Rational& c2arn2) {
    return t.norm() <= c2arn2;
}
inline bool certificate_holds(const std::complex<double>& t, const Rational& c2arn2) {
    return std::norm(t) <= to_double(c2arn2) * (1.0 + 4e-15);
}

} // namespace detail

template <class Scalar>
class MomentFunctional {
public:
    MomentFunctional(VectorIndex vi, std::vector<Scalar> moments,
                     std::optional<ExpTypeCertificate> certificate = std::nullopt)
        : vi_(std::move(vi)), t_(std::move(moments)), cert_(certificate) {
        if (t_.empty()) t_.push_back(Scalar(0));
        if (cert_) validate_certificate();
    }

    const VectorIndex& vi() const { return vi_; }
    /// Largest stored moment index M (moments t_0..t_M).
    long max_index() const { return static_cast<long>(t_.size()) - 1; }
    const std::vector<Scalar>& moments() const { return t_; }
    const Scalar& moment(long n) const {
        if (n < 0 || n > max_index())
            throw ArgumentError("MomentFunctional::moment: index out of range");
        return t_[n];
    }
    const std::optional<ExpTypeCertificate>& certificate() const { return cert_; }

    MomentFunctional with_certificate(ExpTypeCertificate cert) const {
        return MomentFunctional(vi_, t_, cert);
    }

    /// Dirac functional at the origin: <delta, u> = u(0), moments (1, 0, ...).
    static MomentFunctional dirac(VectorIndex vi, long max_index = 0) {
        std::vector<Scalar> t(max_index + 1, Scalar(0));
        t[0] = Scalar(1);
        return MomentFunctional(std::move(vi), std::move(t),
                                ExpTypeCertificate(1.0, 1.0, ExpTypeCertificate::Source::declared));
    }

    /// Evaluation functional at point a: moments a^{rn}.
    static MomentFunctional dirac_at(VectorIndex vi, const Scalar& a, long max_index) {
        std::vector<Scalar> t(max_index + 1);
        Scalar ar = scalar_pow(a, vi.r());
        t[0] = Scalar(1);
        for (long n = 1; n <= max_index; ++n) t[n] = t[n - 1] * ar;
        double mod = std::abs(to_complex(a));
        double base = mod > 0.0 ? mod : 1.0;
        return MomentFunctional(std::move(vi), std::move(t),
                                ExpTypeCertificate(1.0 + 1e-12, base * (1.0 + 1e-12),
                                                   ExpTypeCertificate::Source::declared));
    }

    friend bool operator==(const MomentFunctional& a, const MomentFunctional& b) {
        return a.vi_ == b.vi_ && a.t_ == b.t_;
    }

private:
    void validate_certificate() {
        // (C a^{rn})^2 built incrementally: start C^2, multiply a^{2r} per step.
        Rational acc = Rational(cert_->C) * Rational(cert_->C);
        Rational step = rational_pow(Rational(cert_->a), 2L * vi_.r());
        for (long n = 0; n <= max_index(); ++n) {
            if (!detail::certificate_holds(t_[n], acc))
                throw ArgumentError("MomentFunctional: certificate |t_n| <= C a^{rn} fails at n = " +
                                    std::to_string(n));
            acc *= step;
        }
    }

    VectorIndex vi_;
    std::vector<Scalar> t_;
    std::optional<ExpTypeCertificate> cert_;
};

using FunctionalQ = MomentFunctional<QComplex>;
using FunctionalD = MomentFunctional<std::complex<double>>;

inline FunctionalD to_floating(const FunctionalQ& f) {
    std::vector<std::complex<double>> t(f.moments().size());
    for (size_t n = 0; n < t.size(); ++n) t[n] = to_complex(f.moments()[n]);
    return FunctionalD(f.vi(), std::move(t), f.certificate());
}

} // namespace hb
