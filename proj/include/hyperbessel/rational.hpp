#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "hyperbessel/errors.hpp"

namespace hb {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^k for k >= 0 by binary exponentiation.
inline Rational rational_pow(const Rational& q, long k) {
    if (k < 0) throw ArgumentError("rational_pow: negative exponent");
    Rational base = q, out = 1;
    for (; k > 0; k >>= 1) {
        if (k & 1) out *= base;
        if (k > 1) base *= base;
    }
    return out;
}

/// Parses "p", "-p", "p/q" (optionally signed) into an exact rational.
inline Rational rational_from_string(const std::string& s) {
    try {
        if (s.empty()) throw std::runtime_error("empty");
        return Rational(s);
    } catch (const std::exception&) {
        throw ArgumentError("rational_from_string: cannot parse '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Complex number over the exact rationals. std::complex is only specified
/// for builtin floating types, so the exact coefficient mode carries its own
/// minimal field implementation.
struct QComplex {
    Rational re;
    Rational im;

    QComplex() : re(0), im(0) {}
    QComplex(int v) : re(v), im(0) {}               // NOLINT(google-explicit-constructor)
    QComplex(Rational r) : re(std::move(r)), im(0) {} // NOLINT(google-explicit-constructor)
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    QComplex operator-() const { return {-re, -im}; }

    QComplex& operator+=(const QComplex& o) { re += o.re; im += o.im; return *this; }
    QComplex& operator-=(const QComplex& o) { re -= o.re; im -= o.im; return *this; }
    QComplex& operator*=(const QComplex& o) {
        Rational nre = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(nre);
        return *this;
    }
    QComplex& operator*=(const Rational& q) { re *= q; im *= q; return *this; }
    QComplex& operator/=(const Rational& q) {
        if (q == 0) throw ArgumentError("QComplex: division by zero");
        re /= q; im /= q; return *this;
    }
    QComplex& operator/=(const QComplex& o) {
        Rational n = o.re * o.re + o.im * o.im;
        if (n == 0) throw ArgumentError("QComplex: division by zero");
        Rational nre = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(nre);
        return *this;
    }

    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
    friend QComplex operator*(QComplex a, const Rational& q) { return a *= q; }
    friend QComplex operator*(const Rational& q, QComplex a) { return a *= q; }
    friend QComplex operator/(QComplex a, const Rational& q) { return a /= q; }
    friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
    friend bool operator==(const QComplex& a, const QComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }

    /// Squared modulus, exact.
    Rational norm() const { return re * re + im * im; }
    QComplex conj() const { return {re, -im}; }
};

inline std::complex<double> to_complex(const QComplex& z) {
    return {to_double(z.re), to_double(z.im)};
}
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

inline bool scalar_is_zero(const QComplex& z) { return z.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }

/// Bridges generic scalar code between the exact and floating modes.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<QComplex> {
    static QComplex from_rational(const Rational& q) { return QComplex(q); }
    static QComplex mul_rational(const QComplex& s, const Rational& q) { return s * q; }
    static constexpr bool exact = true;
};

template <>
struct ScalarTraits<std::complex<double>> {
    static std::complex<double> from_rational(const Rational& q) { return {to_double(q), 0.0}; }
    static std::complex<double> mul_rational(const std::complex<double>& s, const Rational& q) {
        return s * to_double(q);
    }
    static constexpr bool exact = false;
};

/// s^k for k >= 0, any scalar.
template <class Scalar>
Scalar scalar_pow(Scalar base, long k) {
    if (k < 0) throw ArgumentError("scalar_pow: negative exponent");
    Scalar out = ScalarTraits<Scalar>::from_rational(Rational(1));
    for (; k > 0; k >>= 1) {
        if (k & 1) out *= base;
        if (k > 1) base *= base;
    }
    return out;
}

} // namespace hb
