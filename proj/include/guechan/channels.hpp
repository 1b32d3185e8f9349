#pragma once

#include <array>
#include <utility>

#include "guechan/ensemble.hpp"

namespace guechan {

// Pauli decomposition A = a0*1 + a.sigma of a 2x2 Hermitian operator.
struct PauliVector {
    double a0 = 0.0;
    std::array<double, 3> a{0.0, 0.0, 0.0};

    double norm2() const { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2]; }
};

PauliVector pauli_decompose(const CMatrix& a);
CMatrix pauli_compose(const PauliVector& v);

// Heisenberg evolution of a single qubit under g.sigma for time t:
// exp(i t g.sigma) A exp(-i t g.sigma), exact for any g. The |g| -> 0 limit
// is taken by series below |g| t = 1e-6.
PauliVector qubit_evolve(const PauliVector& a, const std::array<double, 3>& g, double t);

// Depolarizing amplitude of the GUE-averaged qubit channel:
// f(t) = (2/3) [1 - exp(-t^2/2) (1 - t^2)].
double qubit_f(double t);

// Matrix-element variances of the noisy qubit operator for initial A:
// {diagonal, off-diagonal}, in terms of f(t), f(2t), a_z^2 and |a|^2.
std::pair<double, double> qubit_variance_curves(const PauliVector& a, double t);

struct QubitMatelMeans {
    double diag0 = 0.0;    // |A_00| average: |a0 + (1-f) a_z|
    double diag1 = 0.0;    // |A_11| average: |a0 - (1-f) a_z|
    double offdiag = 0.0;  // (1-f) sqrt(a_x^2 + a_y^2)
};
QubitMatelMeans qubit_matel_means(const PauliVector& a, double t);

// Onefold average channel: (f, N) with f(t) = (N^2 - R_2(t)) / (N^2 - 1).
struct DepolarizingChannel {
    int n = 0;
    double f = 0.0;
};
DepolarizingChannel depolarizing_f(double t, int n);

// avg(A, t) = (1 - f) A + f tr(A)/N * 1.
CMatrix avg_channel_apply(const CMatrix& a, double t);

// The eight time-dependent coefficients of the twofold channel
// E[A_G(t) (x) B_G(t)], grouped by operator content.
struct TwofoldCoefficients {
    double c_ab = 0.0;       // A (x) B
    double c_ba = 0.0;       // B (x) A
    double c_1a = 0.0;       // tr(B) 1(x)A + tr(A) B(x)1 + S(1(x)BA + AB(x)1)
    double c_a1 = 0.0;       // tr(B) A(x)1 + tr(A) 1(x)B + S(1(x)AB + BA(x)1)
    double c_tratrb = 0.0;   // tr(A)tr(B) 1(x)1 + tr(AB) S
    double c_trab = 0.0;     // tr(AB) 1(x)1 + tr(A)tr(B) S
    double c_1ab = 0.0;      // 1(x){A,B} + {A,B}(x)1 + tr(B) S(1(x)A + A(x)1) + tr(A) S(1(x)B + B(x)1)
    double c_s = 0.0;        // S(A (x) B + B (x) A)
};

// Coefficients at (t, n) for any n >= 2. The values come from an exact
// rational table in n assembled over the nonrepeating eigenvalue sums; terms
// whose sums are structurally empty (three distinct indices at n = 2, four at
// n <= 3) drop out identically, which keeps the assembly finite at small n
// despite the singular Weingarten denominators.
TwofoldCoefficients twofold_coefficients(double t, int n);

// Full twofold channel E[A_G(t) (x) B_G(t)] on the doubled space, slot-1-major
// Kronecker convention. A and B must be Hermitian with equal dimension.
CMatrix twofold_apply(const CMatrix& a, const CMatrix& b, double t);

// var(A, t) = E[(A_G(t))* (x) A_G(t)] - avg(A,t)* (x) avg(A,t). Because
// A_G(t) stays Hermitian, the first term is the slot-1 partial transpose of
// twofold_apply(A, A, t). Matrix-element variances follow from
// tr(var . (|n><m|)^(x2)).
CMatrix variance_operator(const CMatrix& a, double t);

// SWAP operator S|a,b> = |b,a> on the doubled space.
CMatrix swap_operator(int n);

// Slot-1 partial transpose in the same Kronecker convention.
CMatrix partial_transpose_slot1(const CMatrix& m, int n);

// Variance of a matrix element of A_G(t), averaged over A drawn from a GUE of
// width sigma_A: sigma_A^2 (1 - delta_{mn}/N) f(t) (2 - f(t)).
double variance_matel_gue_avg(int m, int n, double t, int dim, double sigma_a);

// Typicality = std / mean for the same GUE-averaged A:
// sqrt[ (1 - delta/N) f (2-f) / ((1-f)^2 + delta f / N) ]; sigma_A cancels.
double typicality(int m, int n, double t, int dim);

}  // namespace guechan
