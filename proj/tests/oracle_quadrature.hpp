// Test-only oracles: Gauss-Hermite quadrature over the oscillator
// eigenfunctions, independent of the Laguerre kernel path under test. The
// nonrepeating eigenvalue integrals are evaluated by expanding the k-point
// kernel determinant over permutations and integrating cycle by cycle.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

struct GaussHermite {
    std::vector<double> x;
    std::vector<double> w;
};

// Golub-Welsch on the Hermite Jacobi matrix (weight e^{-x^2}).
inline GaussHermite gauss_hermite(int m) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
        double b = std::sqrt(k / 2.0);
        j(k, k - 1) = b;
        j(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    GaussHermite gh;
    gh.x.resize(m);
    gh.w.resize(m);
    const double sqrt_pi = std::sqrt(M_PI);
    for (int k = 0; k < m; ++k) {
        gh.x[k] = es.eigenvalues()(k);
        double v0 = es.eigenvectors()(0, k);
        gh.w[k] = sqrt_pi * v0 * v0;
    }
    return gh;
}

// Orthonormal Hermite functions with the Gaussian stripped: h_n with
// integral h_m h_n e^{-x^2} dx = delta_{mn}.
inline Eigen::MatrixXd hermite_rows(const std::vector<double>& x, int n) {
    Eigen::MatrixXd h(n, static_cast<int>(x.size()));
    const double h0 = std::pow(M_PI, -0.25);
    for (std::size_t i = 0; i < x.size(); ++i) {
        h(0, static_cast<int>(i)) = h0;
        if (n > 1) h(1, static_cast<int>(i)) = std::sqrt(2.0) * x[i] * h0;
        for (int k = 2; k < n; ++k) {
            h(k, static_cast<int>(i)) = std::sqrt(2.0 / k) * x[i] * h(k - 1, static_cast<int>(i)) -
                                        std::sqrt((k - 1.0) / k) * h(k - 2, static_cast<int>(i));
        }
    }
    return h;
}

// <m|e^{-i s x}|n> by quadrature.
inline CMat xmat_quad(double s, int n, int m_nodes = 120) {
    GaussHermite gh = gauss_hermite(m_nodes);
    Eigen::MatrixXd h = hermite_rows(gh.x, n);
    CMat out = CMat::Zero(n, n);
    for (int i = 0; i < m_nodes; ++i) {
        Complex ph = gh.w[i] * std::exp(Complex(0.0, -s * gh.x[i]));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) out(a, b) += ph * h(a, i) * h(b, i);
    }
    return out;
}

// kappa over k nonrepeating eigenvalues with phases exp(i * signs[j] * t * l_j),
// against the k-point marginal of the N-dimensional GUE spectrum.
inline double kappa_quad(double t, int n, const std::vector<int>& signs, int m_nodes = 100) {
    int k = static_cast<int>(signs.size());
    GaussHermite gh = gauss_hermite(m_nodes);
    Eigen::MatrixXd h = hermite_rows(gh.x, n);
    Eigen::MatrixXd kern = h.transpose() * h;  // kernel with Gaussian folded into weights
    std::vector<CMat> ms(k);
    for (int j = 0; j < k; ++j) {
        ms[j] = CMat(m_nodes, m_nodes);
        for (int b = 0; b < m_nodes; ++b) {
            Complex ph = gh.w[b] * std::exp(Complex(0.0, signs[j] * t * gh.x[b]));
            for (int a = 0; a < m_nodes; ++a) ms[j](a, b) = kern(a, b) * ph;
        }
    }
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total(0.0, 0.0);
    do {
        std::vector<bool> seen(k, false);
        Complex term(1.0, 0.0);
        int cycles = 0;
        for (int i = 0; i < k; ++i) {
            if (seen[i]) continue;
            ++cycles;
            CMat prod = ms[i];
            seen[i] = true;
            int j = perm[i];
            while (!seen[j]) {
                prod = prod * ms[j];
                seen[j] = true;
                j = perm[j];
            }
            term *= prod.trace();
        }
        double sign = ((k - cycles) % 2 == 0) ? 1.0 : -1.0;
        total += sign * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    double pref = 1.0;
    for (int j = 0; j < k; ++j) pref /= (n - j);
    return (pref * total).real();
}

}  // namespace oracle
