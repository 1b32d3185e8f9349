#include "guechan/channels.hpp"

#include <cmath>
#include <string>

#include "guechan/error.hpp"
#include "guechan/sff.hpp"

namespace guechan {

namespace {

const Complex kI(0.0, 1.0);

CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}
CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace

PauliVector pauli_decompose(const CMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2) {
        throw InvalidDimensionError("pauli_decompose: needs a 2x2 matrix");
    }
    require_hermitian(a);
    PauliVector v;
    v.a0 = 0.5 * a.trace().real();
    v.a[0] = 0.5 * (a * pauli_x()).trace().real();
    v.a[1] = 0.5 * (a * pauli_y()).trace().real();
    v.a[2] = 0.5 * (a * pauli_z()).trace().real();
    return v;
}

CMatrix pauli_compose(const PauliVector& v) {
    return v.a0 * CMatrix::Identity(2, 2) + v.a[0] * pauli_x() + v.a[1] * pauli_y() +
           v.a[2] * pauli_z();
}

PauliVector qubit_evolve(const PauliVector& a, const std::array<double, 3>& g, double t) {
    double g2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
    double gn = std::sqrt(g2);
    double c = std::cos(2.0 * gn * t);
    double s_over_g;   // sin(2 g t) / g
    double s2_over_g2; // 2 sin^2(g t) / g^2
    if (gn * std::abs(t) < 1e-6) {
        double u = gn * t;
        s_over_g = 2.0 * t * (1.0 - (2.0 / 3.0) * u * u);
        s2_over_g2 = 2.0 * t * t * (1.0 - u * u / 3.0);
    } else {
        s_over_g = std::sin(2.0 * gn * t) / gn;
        double sh = std::sin(gn * t);
        s2_over_g2 = 2.0 * sh * sh / g2;
    }
    std::array<double, 3> cross = {g[1] * a.a[2] - g[2] * a.a[1],
                                   g[2] * a.a[0] - g[0] * a.a[2],
                                   g[0] * a.a[1] - g[1] * a.a[0]};
    double gdota = g[0] * a.a[0] + g[1] * a.a[1] + g[2] * a.a[2];
    PauliVector out;
    out.a0 = a.a0;
    for (int i = 0; i < 3; ++i) {
        out.a[i] = c * a.a[i] - s_over_g * cross[i] + s2_over_g2 * gdota * g[i];
    }
    return out;
}

double qubit_f(double t) {
    return (2.0 / 3.0) * (1.0 - std::exp(-0.5 * t * t) * (1.0 - t * t));
}

std::pair<double, double> qubit_variance_curves(const PauliVector& a, double t) {
    double f1 = qubit_f(t);
    double f2 = qubit_f(2.0 * t);
    double az2 = a.a[2] * a.a[2];
    double n2 = a.norm2();
    double w = (7.0 * f1 - 3.0 * f2 - 5.0 * f1 * f1) / 5.0;
    double var_diag = w * az2 + (f1 + f2) / 5.0 * n2;
    double var_off = -w * az2 + (9.0 * f1 - f2 - 5.0 * f1 * f1) / 5.0 * n2;
    return {var_diag, var_off};
}

QubitMatelMeans qubit_matel_means(const PauliVector& a, double t) {
    double f1 = qubit_f(t);
    QubitMatelMeans m;
    m.diag0 = std::abs(a.a0 + (1.0 - f1) * a.a[2]);
    m.diag1 = std::abs(a.a0 - (1.0 - f1) * a.a[2]);
    m.offdiag = (1.0 - f1) * std::sqrt(a.a[0] * a.a[0] + a.a[1] * a.a[1]);
    return m;
}

DepolarizingChannel depolarizing_f(double t, int n) {
    if (n < 2) {
        throw InvalidDimensionError("depolarizing_f: n must be >= 2 (n = 1 is the identity)");
    }
    DepolarizingChannel ch;
    ch.n = n;
    ch.f = (static_cast<double>(n) * n - sff2(t, n)) / (static_cast<double>(n) * n - 1.0);
    return ch;
}

CMatrix avg_channel_apply(const CMatrix& a, double t) {
    int n = static_cast<int>(a.rows());
    if (n < 2) throw InvalidDimensionError("avg_channel_apply: dim must be >= 2");
    require_hermitian(a);
    double f = depolarizing_f(t, n).f;
    return (1.0 - f) * a + (f * a.trace().real() / n) * CMatrix::Identity(n, n);
}

namespace {

// Exact integer-coefficient table for the twofold channel. Each channel
// coefficient is
//   [ P0(N) + Pk2(N) kappa2(t) + Pk2d(N) kappa2(2t)
//     + Pk41(N) kappa41(t) + Pk4(N) kappa4(t) ] / (N (N+1) (N+2) (N+3)),
// with the kappa terms dropped where their nonrepeating sums are empty.
// The table was obtained by Gram inversion of the fourfold Haar average and
// cross-checked against pseudo-inverse Haar moments at N = 2, 3; coefficients
// are ascending-degree polynomials in N.
struct CoeffPolys {
    std::array<long, 5> c0, k2, k2d, k41, k4;
};

constexpr std::array<CoeffPolys, 8> kTwofoldTable{{
    // c_ab
    {{{4, 7, 2, 0, 0}}, {{-8, 0, 12, 4, 0}}, {{2, 3, 1, 0, 0}}, {{-4, -4, 4, 2, 0}}, {{6, 0, -8, 0, 1}}},
    // c_ba
    {{{4, 1, 0, 0, 0}}, {{-8, 0, 0, 0, 0}}, {{2, 3, 1, 0, 0}}, {{-4, -4, -2, 0, 0}}, {{6, 0, 1, 0, 0}}},
    // c_1a
    {{{1, 0, 0, 0, 0}}, {{-2, 2, 0, 0, 0}}, {{-1, -1, 0, 0, 0}}, {{2, 4, 0, 0, 0}}, {{0, -5, 0, 0, 0}}},
    // c_a1
    {{{1, 3, 1, 0, 0}}, {{-2, -4, 1, 1, 0}}, {{-1, -1, 0, 0, 0}}, {{2, -2, -2, 0, 0}}, {{0, 4, 0, -1, 0}}},
    // c_tratrb
    {{{4, 4, 1, 0, 0}}, {{-8, -6, -2, 0, 0}}, {{2, 0, 0, 0, 0}}, {{-4, 2, 0, 0, 0}}, {{6, 0, 1, 0, 0}}},
    // c_trab
    {{{-2, -1, 0, 0, 0}}, {{4, 4, 0, 0, 0}}, {{2, 0, 0, 0, 0}}, {{-4, 2, 0, 0, 0}}, {{0, -5, 0, 0, 0}}},
    // c_1ab
    {{{-2, -1, 0, 0, 0}}, {{4, 1, -1, 0, 0}}, {{-1, -1, 0, 0, 0}}, {{2, 1, -1, 0, 0}}, {{-3, 0, 2, 0, 0}}},
    // c_s
    {{{-2, -1, 0, 0, 0}}, {{4, -2, -2, 0, 0}}, {{2, 3, 1, 0, 0}}, {{-4, -4, 1, 1, 0}}, {{0, 4, 0, -1, 0}}},
}};

double poly_eval(const std::array<long, 5>& p, double n) {
    double v = 0.0;
    for (int k = 4; k >= 0; --k) v = v * n + p[k];
    return v;
}

}  // namespace

TwofoldCoefficients twofold_coefficients(double t, int n) {
    if (n < 2) throw InvalidDimensionError("twofold_coefficients: n must be >= 2");
    double nn = n;
    double denom = nn * (nn + 1.0) * (nn + 2.0) * (nn + 3.0);
    double k2 = kappa2(t, n);
    double k2d = kappa2(2.0 * t, n);
    double k41 = (n >= 3) ? kappa41(t, n) : 0.0;
    double k4 = (n >= 4) ? kappa4(t, n) : 0.0;
    std::array<double, 8> c;
    for (int i = 0; i < 8; ++i) {
        const CoeffPolys& p = kTwofoldTable[i];
        double v = poly_eval(p.c0, nn) + poly_eval(p.k2, nn) * k2 + poly_eval(p.k2d, nn) * k2d;
        if (n >= 3) v += poly_eval(p.k41, nn) * k41;
        if (n >= 4) v += poly_eval(p.k4, nn) * k4;
        c[i] = v / denom;
    }
    return TwofoldCoefficients{c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]};
}

CMatrix swap_operator(int n) {
    CMatrix s = CMatrix::Zero(n * n, n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) s(b * n + a, a * n + b) = 1.0;
    }
    return s;
}

CMatrix partial_transpose_slot1(const CMatrix& m, int n) {
    CMatrix out(n * n, n * n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = 0; j2 < n; ++j2)
                    out(i1 * n + i2, j1 * n + j2) = m(j1 * n + i2, i1 * n + j2);
    return out;
}

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    int n = static_cast<int>(a.rows()), m = static_cast<int>(b.rows());
    CMatrix out(n * m, n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.block(i * m, j * m, m, m) = a(i, j) * b;
    return out;
}

}  // namespace

CMatrix twofold_apply(const CMatrix& a, const CMatrix& b, double t) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInputError("twofold_apply: A and B must have the same dimension");
    }
    int n = static_cast<int>(a.rows());
    if (n < 2) throw InvalidDimensionError("twofold_apply: dim must be >= 2");
    require_hermitian(a);
    require_hermitian(b);
    TwofoldCoefficients c = twofold_coefficients(t, n);
    CMatrix id = CMatrix::Identity(n, n);
    CMatrix id2 = CMatrix::Identity(n * n, n * n);
    CMatrix s = swap_operator(n);
    Complex tr_a = a.trace(), tr_b = b.trace(), tr_ab = (a * b).trace();

    CMatrix out = c.c_ab * kron(a, b) + c.c_ba * kron(b, a);
    out += c.c_1a * (tr_b * kron(id, a) + tr_a * kron(b, id) + s * (kron(id, b * a) + kron(a * b, id)));
    out += c.c_a1 * (tr_b * kron(a, id) + tr_a * kron(id, b) + s * (kron(id, a * b) + kron(b * a, id)));
    out += c.c_tratrb * (tr_a * tr_b * id2 + tr_ab * s);
    out += c.c_trab * (tr_ab * id2 + tr_a * tr_b * s);
    out += c.c_1ab * (kron(id, a * b + b * a) + kron(a * b + b * a, id) +
                      tr_b * (s * (kron(id, a) + kron(a, id))) +
                      tr_a * (s * (kron(id, b) + kron(b, id))));
    out += c.c_s * (s * (kron(a, b) + kron(b, a)));
    return out;
}

CMatrix variance_operator(const CMatrix& a, double t) {
    int n = static_cast<int>(a.rows());
    require_hermitian(a);
    CMatrix phi2 = twofold_apply(a, a, t);
    CMatrix avg = avg_channel_apply(a, t);
    return partial_transpose_slot1(phi2, n) - kron(avg.conjugate(), avg);
}

double variance_matel_gue_avg(int m, int n, double t, int dim, double sigma_a) {
    if (dim < 2) throw InvalidDimensionError("variance_matel_gue_avg: dim must be >= 2");
    if (sigma_a <= 0.0) throw InvalidParameterError("variance_matel_gue_avg: sigma_a must be > 0");
    double f = depolarizing_f(t, dim).f;
    double delta = (m == n) ? 1.0 : 0.0;
    return sigma_a * sigma_a * (1.0 - delta / dim) * f * (2.0 - f);
}

double typicality(int m, int n, double t, int dim) {
    if (dim < 2) throw InvalidDimensionError("typicality: dim must be >= 2");
    double f = depolarizing_f(t, dim).f;
    double delta = (m == n) ? 1.0 : 0.0;
    double num = (1.0 - delta / dim) * f * (2.0 - f);
    double den = (1.0 - f) * (1.0 - f) + delta * f / dim;
    if (!(den > 1e-300)) {
        throw DegeneratePointError("typicality: mean-square denominator vanishes at t = " +
                                   std::to_string(t));
    }
    return std::sqrt(num / den);
}

}  // namespace guechan
