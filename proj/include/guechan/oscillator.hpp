#pragma once

#include <complex>
#include <vector>

#include "guechan/ensemble.hpp"

namespace guechan {

// Table of harmonic-oscillator matrix elements X[m][n] = <m|exp(-i t x)|n>
// over the first n_basis states. Symmetric (X[m][n] = X[n][m]), equals the
// identity at t = 0, and conjugates under t -> -t.
struct XMatrix {
    double t = 0.0;
    int n_basis = 0;
    CMatrix entries;
};

// Generalized Laguerre polynomial L_n^{(a)}(x) for integer upper index a.
// Negative a is reduced via L_n^{(-b)}(x) = ((n-b)!/n!) (-x)^b L_{n-b}^{(b)}(x),
// which requires n + a >= 0.
double laguerre(int n, int a, double x);

// <m|exp(alpha x)|n> in terms of generalized Laguerre polynomials:
//   exp(alpha^2/4) sqrt(min!/max!) (alpha/sqrt 2)^{|m-n|} L_min^{|m-n|}(-alpha^2/2).
// The factorial ratio is accumulated as a running product, never from raw
// factorials.
Complex exp_x_element(int m, int n, Complex alpha);

// I(t) = sum_{k<n} <k|exp(-i t x)|k>. Real-valued and even in t; equals
// exp(-t^2/4) L_{n-1}^{(1)}(t^2/2) in closed form.
Complex diag_sum(double t, int n);

// Full n x n table of <m|exp(-i t x)|n>. Entries are evaluated through a
// scaled Laguerre recurrence so that the exp(-t^2/4) damping is folded in
// before any large polynomial value can overflow; usable up to n = 128 and
// far beyond the plateau time.
XMatrix x_matrix(double t, int n);

namespace detail {

// M_k = exp(-x/2) L_k^{(a)}(x) for k = 0..n, by the three-term recurrence in k
// at fixed a >= 0. The recurrence is identical to the unscaled one; folding in
// exp(-x/2) keeps every intermediate finite for large x.
std::vector<double> laguerre_scaled_row(int n, int a, double x);

}  // namespace detail

}  // namespace guechan
