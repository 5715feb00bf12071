#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "hyperbessel/errors.hpp"

namespace hb {

/// Upper bound on the factorial tail sum(m>N) x^{rm}/(rm)!, x >= 0.
/// Sums terms until they stop mattering, then closes with a geometric
/// majorant so the result is a true upper bound.
inline double exp_r_tail(double x, int r, long n_trunc) {
    if (x < 0) throw ArgumentError("exp_r_tail: negative radius");
    if (x == 0) return 0.0;
    long m = n_trunc + 1;
    // first term x^{rm}/(rm)! in log space to dodge overflow
    double log_term = static_cast<double>(r) * m * std::log(x) - std::lgamma(static_cast<double>(r) * m + 1.0);
    if (log_term > 700.0) {
        throw OverflowError("exp_r_tail: tail term overflows at index " + std::to_string(m), m);
    }
    double term = std::exp(log_term);
    double sum = 0.0;
    for (int it = 0; it < 100000; ++it) {
        sum += term;
        // ratio to the next term
        double ratio = 1.0;
        for (int j = 1; j <= r; ++j) ratio *= x / (static_cast<double>(r) * m + j);
        ++m;
        term *= ratio;
        if (ratio < 0.5 && term < 1e-320) return sum;
        if (ratio < 0.5 && term <= sum * 1e-18) {
            // geometric closure: remaining tail <= term/(1-ratio)
            return sum + term / (1.0 - ratio);
        }
    }
    return sum + term * 2.0;
}

/// n! in double; inf past 170 (callers treat that as an overflow diagnostic).
inline double factorial_double(long n) {
    double f = 1.0;
    for (long k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

/// Neumaier compensated accumulator for complex terms.
class CompensatedSum {
public:
    void add(std::complex<double> term) {
        add_part(re_, re_c_, term.real());
        add_part(im_, im_c_, term.imag());
    }
    std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0.0, re_c_ = 0.0;
    double im_ = 0.0, im_c_ = 0.0;
};

/// Fixed 17-significant-digit formatting; keeps reports byte-identical
/// across runs regardless of locale or stream state.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Heuristic truncated-scale detector: do |v_n|^{1/(rn)} estimates still
/// climb between the first and second half of the stored range? True means
/// the sequence looks super-exponential and no geometric envelope fits.
inline bool looks_superexponential(const std::vector<double>& abs_values, int r) {
    const long n = static_cast<long>(abs_values.size()) - 1;
    if (n < 8) return false;
    auto half_max = [&](long lo, long hi) {
        double m = 0.0;
        for (long k = lo; k <= hi; ++k) {
            if (abs_values[k] <= 0.0) continue;
            m = std::max(m, std::pow(abs_values[k], 1.0 / (static_cast<double>(r) * k)));
        }
        return m;
    };
    double first = half_max(1, n / 2);
    double second = half_max(n / 2 + 1, n);
    if (first <= 0.0) return false;
    return second > 2.0 * first;
}

} // namespace hb
