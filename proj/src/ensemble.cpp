#include "guechan/ensemble.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "guechan/error.hpp"

namespace guechan {

double hermiticity_residual(const CMatrix& g) {
    return (g - g.adjoint()).norm();
}

void require_hermitian(const CMatrix& g, double tol) {
    if (g.rows() != g.cols()) {
        throw InvalidInputError("matrix is not square: " + std::to_string(g.rows()) + "x" +
                                std::to_string(g.cols()));
    }
    double scale = std::max(1.0, g.norm());
    double res = hermiticity_residual(g);
    if (!(res <= tol * scale)) {
        throw InvalidInputError("matrix is not Hermitian: residual " + std::to_string(res));
    }
}

CMatrix sample_gue(int n, RngStream& rng) {
    if (n < 1) throw InvalidDimensionError("sample_gue: n must be >= 1");
    CMatrix x(n, n);
    const double inv_sqrt2 = 0.70710678118654752440;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            // N_C(0,1): real and imaginary parts each N(0, 1/2)
            double re = rng.next_normal() * inv_sqrt2;
            double im = rng.next_normal() * inv_sqrt2;
            x(i, j) = Complex(re, im);
        }
    }
    CMatrix g = 0.5 * (x + x.adjoint());
    // force an exactly real diagonal; (z + conj z)/2 already is, up to sign of zero
    for (int i = 0; i < n; ++i) g(i, i) = Complex(g(i, i).real(), 0.0);
    return g;
}

double gue_log_density(const CMatrix& g) {
    require_hermitian(g);
    return -(g * g).trace().real();
}

double semicircle_density(double lambda, int n) {
    if (n < 1) throw InvalidDimensionError("semicircle_density: n must be >= 1");
    double r2 = 2.0 * n - lambda * lambda;
    if (r2 <= 0.0) return 0.0;
    return std::sqrt(r2) / (M_PI * n);
}

EigenSystem eigen_decompose(const CMatrix& g) {
    require_hermitian(g);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(g);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigen_decompose: solver did not converge (n=" +
                           std::to_string(g.rows()) + ")");
    }
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace guechan
