#pragma once

/// Complex least squares via normal equations, with a ridge fallback when
/// the Gram matrix is numerically indefinite. Deterministic for fixed input.

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "hyperbessel/errors.hpp"

namespace hb {

struct LeastSquaresResult {
    Eigen::VectorXcd x;
    bool used_ridge = false;
};

inline LeastSquaresResult solve_least_squares(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b,
                                              double ridge = 1e-12) {
    if (a.rows() != b.rows()) throw ArgumentError("solve_least_squares: shape mismatch");
    Eigen::MatrixXcd gram = a.adjoint() * a;
    Eigen::VectorXcd rhs = a.adjoint() * b;
    Eigen::LLT<Eigen::MatrixXcd> llt(gram);
    if (llt.info() == Eigen::Success) {
        Eigen::VectorXcd x = llt.solve(rhs);
        if (x.allFinite()) return {std::move(x), false};
    }
    double scale = gram.diagonal().real().maxCoeff();
    if (!(scale > 0.0)) scale = 1.0;
    Eigen::MatrixXcd reg = gram;
    reg.diagonal().array() += ridge * scale;
    Eigen::LLT<Eigen::MatrixXcd> llt2(reg);
    if (llt2.info() != Eigen::Success)
        throw ArgumentError("solve_least_squares: Gram matrix not positive definite even with ridge");
    return {llt2.solve(rhs), true};
}

/// Residual vector A x - b accumulated in extended precision.
inline std::vector<std::complex<double>> residual_highprec(const Eigen::MatrixXcd& a,
                                                           const Eigen::VectorXcd& x,
                                                           const Eigen::VectorXcd& b) {
    std::vector<std::complex<double>> res(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        std::complex<long double> acc = 0.0L;
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            acc += std::complex<long double>(a(i, j)) * std::complex<long double>(x(j));
        }
        acc -= std::complex<long double>(b(i));
        res[i] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return res;
}

} // namespace hb
