#include "guechan/oscillator.hpp"

#include <cmath>
#include <string>

#include "guechan/error.hpp"

namespace guechan {

namespace {

// Unscaled upward recurrence, valid for real or complex argument.
template <typename T>
T laguerre_recurrence(int n, int a, T x) {
    T lkm1 = T(1);                       // L_0
    if (n == 0) return lkm1;
    T lk = T(1) + static_cast<double>(a) - x;  // L_1
    for (int k = 1; k < n; ++k) {
        T lkp1 = ((static_cast<double>(2 * k + 1 + a) - x) * lk -
                  static_cast<double>(k + a) * lkm1) /
                 static_cast<double>(k + 1);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

template <typename T>
T laguerre_any(int n, int a, T x) {
    if (n < 0) throw InvalidParameterError("laguerre: n must be >= 0");
    if (n == 0) return T(1);  // degree-0 polynomial for any upper index
    if (a >= 0) return laguerre_recurrence(n, a, x);
    int b = -a;
    if (n - b < 0) {
        throw InvalidParameterError("laguerre: need n + a >= 0 for negative upper index (n=" +
                                    std::to_string(n) + ", a=" + std::to_string(a) + ")");
    }
    // L_n^{(-b)}(x) = ((n-b)!/n!) (-x)^b L_{n-b}^{(b)}(x)
    double ratio = 1.0;
    for (int k = n - b + 1; k <= n; ++k) ratio /= k;
    T pw = T(1);
    for (int k = 0; k < b; ++k) pw *= -x;
    return ratio * pw * laguerre_recurrence(n - b, b, x);
}

}  // namespace

double laguerre(int n, int a, double x) { return laguerre_any(n, a, x); }

namespace detail {

std::vector<double> laguerre_scaled_row(int n, int a, double x) {
    std::vector<double> m(static_cast<std::size_t>(n) + 1);
    double m0 = std::exp(-0.5 * x);
    m[0] = m0;
    if (n == 0) return m;
    m[1] = (1.0 + a - x) * m0;
    for (int k = 1; k < n; ++k) {
        m[k + 1] = ((2.0 * k + 1.0 + a - x) * m[k] - (k + a) * m[k - 1]) / (k + 1.0);
    }
    return m;
}

}  // namespace detail

Complex exp_x_element(int m, int n, Complex alpha) {
    if (m < 0 || n < 0) throw InvalidParameterError("exp_x_element: indices must be >= 0");
    int lo = std::min(m, n);
    int hi = std::max(m, n);
    int d = hi - lo;
    double ratio = 1.0;  // sqrt(lo!/hi!)
    for (int k = lo + 1; k <= hi; ++k) ratio /= std::sqrt(static_cast<double>(k));
    Complex pw(1.0, 0.0);
    Complex base = alpha * 0.70710678118654752440;
    for (int k = 0; k < d; ++k) pw *= base;
    Complex arg = -alpha * alpha * 0.5;
    return std::exp(alpha * alpha * 0.25) * ratio * pw * laguerre_any(lo, d, arg);
}

Complex diag_sum(double t, int n) {
    if (n < 1) throw InvalidDimensionError("diag_sum: n must be >= 1");
    // sum_k exp(-t^2/4) L_k(t^2/2), accumulated inside the scaled recurrence
    auto row = detail::laguerre_scaled_row(n - 1, 0, 0.5 * t * t);
    double s = 0.0;
    for (double v : row) s += v;
    return Complex(s, 0.0);
}

XMatrix x_matrix(double t, int n) {
    if (n < 1) throw InvalidDimensionError("x_matrix: n must be >= 1");
    XMatrix x;
    x.t = t;
    x.n_basis = n;
    x.entries = CMatrix::Zero(n, n);
    const double arg = 0.5 * t * t;
    const double s = t * 0.70710678118654752440;  // t/sqrt(2), signed
    // phase (-i)^d cycle
    const Complex phase_cycle[4] = {Complex(1, 0), Complex(0, -1), Complex(-1, 0), Complex(0, 1)};
    for (int d = 0; d < n; ++d) {
        auto row = detail::laguerre_scaled_row(n - 1 - d, d, arg);
        // prefactor p(lo) = |s|^d sqrt(lo!/(lo+d)!), built as a running product
        double p = 1.0;
        for (int k = 1; k <= d; ++k) p *= std::abs(s) / std::sqrt(static_cast<double>(k));
        double sign = (d % 2 == 1 && s < 0.0) ? -1.0 : 1.0;
        Complex phase = phase_cycle[d % 4] * sign;
        for (int lo = 0; lo + d < n; ++lo) {
            double r = row[static_cast<std::size_t>(lo)];
            // exp(-t^2/4) underflow means the entry is a true zero; skip the
            // prefactor so no 0 * huge products appear
            Complex v = (r == 0.0) ? Complex(0, 0) : phase * (p * r);
            x.entries(lo, lo + d) = v;
            x.entries(lo + d, lo) = v;
            p *= std::sqrt((lo + 1.0) / (lo + 1.0 + d));
        }
    }
    return x;
}

}  // namespace guechan
