#pragma once

// Shared deterministic generators for the property-style tests.

#include <complex>
#include <random>
#include <vector>

#include "hyperbessel/functional.hpp"
#include "hyperbessel/series.hpp"

namespace hbtest {

using hb::QComplex;
using hb::Rational;

inline Rational random_rational(std::mt19937& rng, long num_max = 6, long den_max = 4) {
    std::uniform_int_distribution<long> num(-num_max, num_max), den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline QComplex random_qcomplex(std::mt19937& rng) {
    return {random_rational(rng), random_rational(rng)};
}

inline std::complex<double> random_complex(std::mt19937& rng, double radius = 1.0) {
    std::uniform_real_distribution<double> d(-radius, radius);
    return {d(rng), d(rng)};
}

/// Admissible index with rational gamma a nonnegative offset above the bound.
inline hb::VectorIndex random_vi(std::mt19937& rng, int r) {
    std::vector<Rational> gamma;
    for (int k = 1; k < r; ++k)
        gamma.push_back(Rational(k - r, r) + hb::rational_abs(random_rational(rng)));
    return {r, std::move(gamma)};
}

inline hb::SeriesQ random_series_q(std::mt19937& rng, const hb::VectorIndex& vi, long n_trunc) {
    std::vector<QComplex> u(n_trunc + 1);
    for (auto& c : u) c = random_qcomplex(rng);
    return {vi, std::move(u)};
}

inline hb::SeriesD random_series_d(std::mt19937& rng, const hb::VectorIndex& vi, long n_trunc,
                                   double radius = 1.0) {
    std::vector<std::complex<double>> u(n_trunc + 1);
    for (auto& c : u) c = random_complex(rng, radius);
    return {vi, std::move(u)};
}

inline hb::FunctionalQ random_functional_q(std::mt19937& rng, const hb::VectorIndex& vi,
                                           long max_index) {
    std::vector<QComplex> t(max_index + 1);
    for (auto& c : t) c = random_qcomplex(rng);
    return {vi, std::move(t)};
}

} // namespace hbtest
