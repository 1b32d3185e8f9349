#pragma once

#include <cmath>
#include <complex>

namespace guechan {

// Streaming mean/variance for complex samples, real and imaginary parts
// tracked separately (Welford update, Chan et al. merge). Merging partial
// accumulators from disjoint batches reproduces the single-pass result up to
// roundoff, independent of merge order.
struct ComplexAccumulator {
    long n = 0;
    double mean_re = 0.0, mean_im = 0.0;
    double m2_re = 0.0, m2_im = 0.0;

    void add(std::complex<double> v) {
        ++n;
        double dre = v.real() - mean_re;
        mean_re += dre / n;
        m2_re += dre * (v.real() - mean_re);
        double dim = v.imag() - mean_im;
        mean_im += dim / n;
        m2_im += dim * (v.imag() - mean_im);
    }

    void merge(const ComplexAccumulator& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        long nn = n + o.n;
        double dre = o.mean_re - mean_re;
        m2_re += o.m2_re + dre * dre * (static_cast<double>(n) * o.n / nn);
        mean_re += dre * o.n / nn;
        double dim = o.mean_im - mean_im;
        m2_im += o.m2_im + dim * dim * (static_cast<double>(n) * o.n / nn);
        mean_im += dim * o.n / nn;
        n = nn;
    }

    std::complex<double> mean() const { return {mean_re, mean_im}; }
    // unbiased sample variances
    double var_re() const { return n > 1 ? m2_re / (n - 1.0) : 0.0; }
    double var_im() const { return n > 1 ? m2_im / (n - 1.0) : 0.0; }
    // standard errors of the mean
    double se_re() const { return n > 1 ? std::sqrt(var_re() / n) : 0.0; }
    double se_im() const { return n > 1 ? std::sqrt(var_im() / n) : 0.0; }
    double se_abs() const {
        return n > 1 ? std::sqrt((var_re() + var_im()) / n) : 0.0;
    }
};

}  // namespace guechan
