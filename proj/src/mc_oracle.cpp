#include "guechan/mc_oracle.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <string>

#include "guechan/error.hpp"
#include "guechan/parallel.hpp"

namespace guechan {

bool McMatrixEstimate::entry_agrees(int i, int j, Complex reference, double sigmas,
                                    double floor) const {
    double dre = std::abs(mean(i, j).real() - reference.real());
    double dim = std::abs(mean(i, j).imag() - reference.imag());
    return dre <= sigmas * se_re(i, j) + floor && dim <= sigmas * se_im(i, j) + floor;
}

CMatrix mc_haar_unitary(int n, RngStream& rng) {
    if (n < 1) throw InvalidDimensionError("mc_haar_unitary: n must be >= 1");
    CMatrix z(n, n);
    const double inv_sqrt2 = 0.70710678118654752440;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            z(i, j) = Complex(rng.next_normal() * inv_sqrt2, rng.next_normal() * inv_sqrt2);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // normalize the R diagonal to positive reals; without this correction the
    // distribution of Q is not Haar
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        Complex phase = (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

namespace {

struct MatrixAccum {
    std::vector<ComplexAccumulator> cells;
    int rows = 0, cols = 0;

    void init(int r, int c) {
        rows = r;
        cols = c;
        cells.assign(static_cast<std::size_t>(r) * c, ComplexAccumulator{});
    }
    ComplexAccumulator& at(int i, int j) { return cells[static_cast<std::size_t>(i) * cols + j]; }
    void add(const CMatrix& m) {
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) at(i, j).add(m(i, j));
    }
    void merge(const MatrixAccum& o) {
        for (std::size_t k = 0; k < cells.size(); ++k) cells[k].merge(o.cells[k]);
    }
    McMatrixEstimate finish() const {
        McMatrixEstimate e;
        e.mean = CMatrix(rows, cols);
        e.se_re = RMatrix(rows, cols);
        e.se_im = RMatrix(rows, cols);
        for (int j = 0; j < cols; ++j) {
            for (int i = 0; i < rows; ++i) {
                const ComplexAccumulator& a = cells[static_cast<std::size_t>(i) * cols + j];
                e.mean(i, j) = a.mean();
                e.se_re(i, j) = a.se_re();
                e.se_im(i, j) = a.se_im();
            }
        }
        e.samples = cells.empty() ? 0 : cells[0].n;
        return e;
    }
};

CMatrix evolve_once(const CMatrix& a, double t, int n, RngStream& rng, bool& ok) {
    CMatrix g = sample_gue(n, rng);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(g);
    if (solver.info() != Eigen::Success) {
        ok = false;
        return CMatrix();
    }
    ok = true;
    const RVector& w = solver.eigenvalues();
    const CMatrix& v = solver.eigenvectors();
    Eigen::VectorXcd e(n);
    for (int k = 0; k < n; ++k) e(k) = std::exp(Complex(0.0, -w(k) * t));
    CMatrix u = v * e.asDiagonal() * v.adjoint();  // exp(-iGt)
    return u.adjoint() * a * u;                    // e^{iGt} A e^{-iGt}
}

// Shared batched driver: fn(sample matrix) per draw, deterministic merge.
template <typename PerDraw>
McMatrixEstimate run_batched(int out_rows, int out_cols, long samples,
                             const RngStream& rng, PerDraw per_draw) {
    if (samples < 2) throw InvalidParameterError("mc oracle: samples must be >= 2");
    const long batch = 512;
    const long nbatches = (samples + batch - 1) / batch;
    std::vector<MatrixAccum> accs(nbatches);
    std::atomic<long> failures{0};
    parallel_for(static_cast<std::size_t>(nbatches), [&](std::size_t b) {
        accs[b].init(out_rows, out_cols);
        RngStream sub = rng.substream(static_cast<std::uint64_t>(b));
        long lo = static_cast<long>(b) * batch;
        long hi = std::min<long>(samples, lo + batch);
        for (long s = lo; s < hi; ++s) {
            bool ok = true;
            CMatrix m = per_draw(sub, ok);
            if (!ok) {
                ++failures;
                continue;
            }
            accs[b].add(m);
        }
    });
    long fail = failures.load();
    if (fail * 1000 > samples) {
        throw NumericError("mc oracle: " + std::to_string(fail) + " of " +
                           std::to_string(samples) + " draws failed to decompose");
    }
    MatrixAccum total = accs[0];
    for (long b = 1; b < nbatches; ++b) total.merge(accs[b]);
    McMatrixEstimate e = total.finish();
    e.failures = fail;
    return e;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    int n = static_cast<int>(a.rows()), m = static_cast<int>(b.rows());
    CMatrix out(n * m, n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.block(i * m, j * m, m, m) = a(i, j) * b;
    return out;
}

}  // namespace

McMatrixEstimate mc_channel_average(const CMatrix& a, double t, long samples,
                                    const RngStream& rng) {
    require_hermitian(a);
    int n = static_cast<int>(a.rows());
    return run_batched(n, n, samples, rng, [&](RngStream& r, bool& ok) {
        return evolve_once(a, t, n, r, ok);
    });
}

McMatrixEstimate mc_twofold(const CMatrix& a, const CMatrix& b, double t, long samples,
                            const RngStream& rng) {
    if (a.rows() != b.rows()) throw InvalidInputError("mc_twofold: dimension mismatch");
    require_hermitian(a);
    require_hermitian(b);
    int n = static_cast<int>(a.rows());
    return run_batched(n * n, n * n, samples, rng, [&](RngStream& r, bool& ok) {
        CMatrix g = sample_gue(n, r);
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(g);
        if (solver.info() != Eigen::Success) {
            ok = false;
            return CMatrix();
        }
        const RVector& w = solver.eigenvalues();
        const CMatrix& v = solver.eigenvectors();
        Eigen::VectorXcd e(n);
        for (int k = 0; k < n; ++k) e(k) = std::exp(Complex(0.0, -w(k) * t));
        CMatrix u = v * e.asDiagonal() * v.adjoint();
        CMatrix at = u.adjoint() * a * u;
        CMatrix bt = u.adjoint() * b * u;
        return kron(at, bt);
    });
}

McMatrixEstimate mc_variance_operator(const CMatrix& a, double t, long samples,
                                      const RngStream& rng) {
    require_hermitian(a);
    int n = static_cast<int>(a.rows());
    // accumulate [conj(A_G) (x) A_G ; A_G] in one (n^2 + n) x n^2-padded pass:
    // simpler to run two passes on the same stream, which keeps the draws
    // identical and the subtraction consistent
    McMatrixEstimate second = run_batched(n * n, n * n, samples, rng,
                                          [&](RngStream& r, bool& ok) {
                                              CMatrix at = evolve_once(a, t, n, r, ok);
                                              if (!ok) return CMatrix();
                                              return kron(at.conjugate(), at);
                                          });
    McMatrixEstimate first = mc_channel_average(a, t, samples, rng);
    McMatrixEstimate out = second;
    out.mean = second.mean - kron(first.mean.conjugate(), first.mean);
    // the mean-squared correction adds O(se^2) uncertainty; keep the dominant
    // second-moment errors
    return out;
}

McScalarEstimate mc_variance_matel(int m, int n, double t, int dim, double sigma_a,
                                   long a_samples, long g_samples, const RngStream& rng) {
    if (dim < 2) throw InvalidDimensionError("mc_variance_matel: dim must be >= 2");
    if (a_samples < 2 || g_samples < 2) {
        throw InvalidParameterError("mc_variance_matel: need at least 2 samples at both levels");
    }
    // sample_gue has entry variance 1/2; rescale to sigma_a^2
    double scale = sigma_a * 1.4142135623730950488;
    std::vector<double> vals(a_samples);
    parallel_for(static_cast<std::size_t>(a_samples), [&](std::size_t i) {
        RngStream sa = rng.substream(2 * i);
        RngStream sg = rng.substream(2 * i + 1);
        CMatrix a = scale * sample_gue(dim, sa);
        ComplexAccumulator acc;
        for (long s = 0; s < g_samples; ++s) {
            bool ok = true;
            CMatrix at = evolve_once(a, t, dim, sg, ok);
            if (!ok) continue;
            acc.add(at(m, n));
        }
        // unbiased var of the matrix element over G: E|x|^2 - |E x|^2
        vals[i] = acc.var_re() + acc.var_im();
    });
    ComplexAccumulator outer;
    for (double v : vals) outer.add(Complex(v, 0.0));
    McScalarEstimate e;
    e.mean = outer.mean_re;
    e.std_error = outer.se_re();
    e.samples = a_samples;
    return e;
}

}  // namespace guechan
