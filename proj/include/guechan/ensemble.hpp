#pragma once

#include <Eigen/Dense>
#include <complex>

#include "guechan/rng.hpp"

namespace guechan {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and a
// unitary whose columns are the corresponding normalized eigenvectors.
struct EigenSystem {
    RVector eigenvalues;
    CMatrix eigenvectors;
};

// Frobenius-norm hermiticity residual ||G - G^dagger||.
double hermiticity_residual(const CMatrix& g);

// Throws InvalidInputError unless ||G - G^dagger|| <= tol * max(1, ||G||).
void require_hermitian(const CMatrix& g, double tol = 1e-12);

// Draw from GUE(n, sigma = 1/sqrt(2)): G = (X + X^dagger)/2 with all entries
// of X complex normal of unit total variance. Every entry of G then has
// variance 1/2 (real normal on the diagonal, complex normal off it), i.e. the
// density is proportional to exp(-tr G^2). Hermiticity is exact by
// construction.
CMatrix sample_gue(int n, RngStream& rng);

// Unnormalized log-density of the GUE at sigma = 1/sqrt(2): -tr(G^2).
// The normalization constant is never needed numerically and is omitted.
double gue_log_density(const CMatrix& g);

// Level density sqrt(2n - lambda^2) / (pi n) on |lambda| <= sqrt(2n), else 0.
double semicircle_density(double lambda, int n);

// Hermitian eigendecomposition with ascending eigenvalues.
EigenSystem eigen_decompose(const CMatrix& g);

// With sigma = 1/sqrt(2) baked in, a general-sigma ensemble is handled by
// rescaling the time argument: curves at noise width sigma and time t equal
// the sigma = 1/sqrt(2) curves at sqrt(2)*sigma*t.
inline double effective_time(double t, double sigma) {
    return 1.4142135623730950488 * sigma * t;
}

}  // namespace guechan
