#pragma once

#include <string>
#include <vector>

#include "guechan/ensemble.hpp"
#include "guechan/rng.hpp"

namespace guechan {

enum class SffKind { R2, R41, R4, MC };

// A spectral form factor sampled on a t-grid. values[0] at t = 0 equals
// N^2 / N^3 / N^4 for R2 / R41 / R4 when the grid starts at zero.
struct SffCurve {
    SffKind kind = SffKind::R2;
    int n = 0;
    std::vector<double> t_grid;
    std::vector<double> values;
    std::vector<double> std_errors;  // MC curves only
    std::vector<double> imag_means;  // MC diagnostic: imaginary part of the mean
    int mc_p = 0;                    // MC metadata
    std::vector<int> mc_q;
};

// Default sweep grid: `points` values total, t = 0 followed by points-1
// geometrically spaced values on [1e-2, 10 n].
std::vector<double> default_t_grid(int n, int points = 256);

// --- nonrepeating eigenvalue sums (building blocks) -------------------------
//
// s2_bracket  = E sum_{m != n} e^{it(l_m - l_n)}            (defined n >= 1)
// s41_bracket = E sum over 3 distinct of e^{it(l_i + l_j - 2 l_k)}
// s4_bracket  = E sum over 4 distinct of e^{it(l_i + l_j - l_k - l_l)}
//
// All are assembled from the shared I(t)/X(t) oscillator kernel. Sums over
// more distinct indices than the dimension holds vanish identically, so the
// brackets are safe at every n.
double s2_bracket(double t, int n);
double s41_bracket(double t, int n);
double s4_bracket(double t, int n);

// kappa_2(t) = s2_bracket / (n(n-1)); normalized so kappa_2(0) = 1. n >= 2.
double kappa2(double t, int n);
// kappa_{4,1}(t) = s41_bracket / (n(n-1)(n-2)). n >= 3.
double kappa41(double t, int n);
// kappa_4(t) = s4_bracket / (n(n-1)(n-2)(n-3)). n >= 4.
double kappa4(double t, int n);

// Two-point SFF R_2(t) = n + s2_bracket(t). R_2(0) = n^2.
double sff2(double t, int n);

// Three-point SFF R_{4,1}(t) = E sum e^{it(l_i + l_j - 2 l_k)}; n >= 3
// (smaller n raises UnsupportedDimensionError pointing at the MC estimator;
// internally sff41_any covers every n).
double sff41(double t, int n);

// Four-point SFF R_4(t) = E |Z(t)|^4; n >= 4 with the same error contract.
double sff4(double t, int n);

// Exact values for any n >= 1 via the nonrepeating-sum expansion with
// structurally-empty terms dropped. These back sff41/sff4 and the low-n
// channel assembly.
double sff41_any(double t, int n);
double sff4_any(double t, int n);

// Laguerre closed form of R_2 (double sum over L_n^{m-n}); kept as a second
// algebraic route for tests, not used by the kernel path.
double sff2_laguerre_form(double t, int n);

// Evaluate an analytic SFF curve over a grid (parallel map over t).
SffCurve sff_curve(SffKind kind, int n, const std::vector<double>& t_grid);

// --- Monte Carlo estimator ---------------------------------------------------

struct McSffPoint {
    double estimate = 0.0;   // real part of the sample mean
    double std_error = 0.0;  // standard error of the real part
    double imag_part = 0.0;  // diagnostic: imaginary part of the mean
    long samples = 0;
};

// Sample mean of Z(t)^p Z*(t)^{p - sum(q) - |q|} prod_i Z*((q_i + 1) t) over
// GUE draws, where Z(t) = tr exp(-iGt) and each q_i counts the index
// coincidences folded into that factor:
//   p = 1, q = {}   -> R_2
//   p = 2, q = {1}  -> R_{4,1}
//   p = 2, q = {}   -> R_4
// Requires sum(q_i + 1) <= p elementwise-positive q (so the conjugate power
// is nonnegative) and sum(q) < p.
McSffPoint sff_mc(int p, const std::vector<int>& q, double t, int n, long samples,
                  const RngStream& rng);

// Same estimator over a whole grid in one pass (eigenvalues are drawn once
// per sample); deterministic for fixed (seed, stream) regardless of thread
// count.
SffCurve sff_mc_curve(int p, const std::vector<int>& q, int n,
                      const std::vector<double>& t_grid, long samples, const RngStream& rng);

std::string sff_kind_name(SffKind kind);

}  // namespace guechan
