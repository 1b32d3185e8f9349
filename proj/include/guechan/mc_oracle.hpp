#pragma once

#include <vector>

#include "guechan/accum.hpp"
#include "guechan/ensemble.hpp"
#include "guechan/rng.hpp"

namespace guechan {

// Entrywise Monte Carlo estimate of a complex matrix: means plus standard
// errors of the real and imaginary parts.
struct McMatrixEstimate {
    CMatrix mean;
    RMatrix se_re;
    RMatrix se_im;
    long samples = 0;
    long failures = 0;

    // |analytic - mean| within `sigmas` standard errors, componentwise, with a
    // small absolute floor for structurally-exact entries.
    bool entry_agrees(int i, int j, Complex reference, double sigmas,
                      double floor = 1e-9) const;
};

// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
// of the R diagonal normalized away.
CMatrix mc_haar_unitary(int n, RngStream& rng);

// Entrywise mean/std-error of e^{iGt} A e^{-iGt} over GUE draws; the
// exponential goes through the eigendecomposition (exact for Hermitian G).
// Decomposition failures are counted and the run aborts if they exceed 0.1%.
McMatrixEstimate mc_channel_average(const CMatrix& a, double t, long samples,
                                    const RngStream& rng);

// Entrywise estimate of E[A_G(t) (x) B_G(t)] on the doubled space.
McMatrixEstimate mc_twofold(const CMatrix& a, const CMatrix& b, double t, long samples,
                            const RngStream& rng);

// Entrywise estimate of E[(A_G(t))* (x) A_G(t)] - E[.]* (x) E[.], the
// variance object diagnosed by variance_operator. Means and fluctuations are
// accumulated in the same pass.
McMatrixEstimate mc_variance_operator(const CMatrix& a, double t, long samples,
                                      const RngStream& rng);

struct McScalarEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long samples = 0;
};

// Nested double-MC estimate of E_A[ var_G(A_mn(t)) ] with A drawn from a GUE
// of width sigma_a: outer loop over A draws, unbiased inner variance over G
// draws, standard error across the outer loop.
McScalarEstimate mc_variance_matel(int m, int n, double t, int dim, double sigma_a,
                                   long a_samples, long g_samples, const RngStream& rng);

}  // namespace guechan
