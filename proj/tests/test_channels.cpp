#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "guechan/channels.hpp"
#include "guechan/error.hpp"
#include "guechan/mc_oracle.hpp"
#include "guechan/rng.hpp"
#include "guechan/sff.hpp"

using namespace guechan;

namespace {

CMatrix random_hermitian(int n, RngStream& rng) {
    CMatrix x(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) x(i, j) = Complex(rng.next_normal(), rng.next_normal());
    CMatrix a = 0.5 * (x + x.adjoint());
    for (int i = 0; i < n; ++i) a(i, i) = Complex(a(i, i).real(), 0.0);
    return a;
}

// direct 2x2 matrix-exponential evolution oracle
PauliVector evolve_oracle(const PauliVector& a, const std::array<double, 3>& g, double t) {
    CMatrix gs = pauli_compose(PauliVector{0.0, {g[0], g[1], g[2]}});
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gs);
    Eigen::VectorXcd ph(2);
    for (int k = 0; k < 2; ++k) ph(k) = std::exp(Complex(0, es.eigenvalues()(k) * t));
    CMatrix u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();  // e^{i t g.sigma}
    CMatrix out = u * pauli_compose(a) * u.adjoint();
    return pauli_decompose(out);
}

// closed-form qubit variance operator, as a 4x4 matrix
CMatrix qubit_variance_matrix(const PauliVector& a, double t) {
    double f1 = qubit_f(t), f2 = qubit_f(2 * t);
    CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    sz << 1, 0, 0, -1;
    CMatrix adots = a.a[0] * sx + a.a[1] * sy + a.a[2] * sz;
    auto kron = [](const CMatrix& x, const CMatrix& y) {
        CMatrix out(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.block(i * 2, j * 2, 2, 2) = x(i, j) * y;
        return out;
    };
    double c1 = (7 * f1 - 3 * f2 - 5 * f1 * f1) / 5.0;
    double c2 = (f1 + f2) / 5.0;
    CMatrix out = c1 * kron(adots.conjugate(), adots);
    out += c2 * a.norm2() *
           (kron(sx.conjugate(), sx) + kron(sy.conjugate(), sy) + kron(sz.conjugate(), sz));
    return out;
}

double extract_matel_variance(const CMatrix& var, int m, int n, int dim) {
    // tr(var . (|n><m|)^(x2))
    CMatrix ket = CMatrix::Zero(dim, dim);
    ket(n, m) = 1.0;
    CMatrix kk(dim * dim, dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) kk.block(i * dim, j * dim, dim, dim) = ket(i, j) * ket;
    return (var * kk).trace().real();
}

}  // namespace

TEST_CASE("pauli decompose/compose roundtrip") {
    RngStream rng(3, 0);
    CMatrix a = random_hermitian(2, rng);
    PauliVector v = pauli_decompose(a);
    CHECK((pauli_compose(v) - a).norm() < 1e-14);
}

TEST_CASE("qubit_evolve basics") {
    PauliVector a{0.7, {0.3, -0.2, 0.9}};
    std::array<double, 3> g{0.4, 1.1, -0.6};
    PauliVector out = qubit_evolve(a, g, 0.0);
    CHECK(out.a0 == a.a0);
    for (int i = 0; i < 3; ++i) CHECK(out.a[i] == doctest::Approx(a.a[i]).epsilon(1e-15));

    // A = X under g = z-hat: a(t) = (cos 2t, -sin 2t, 0)
    PauliVector x{0.0, {1, 0, 0}};
    for (double t : {0.3, 1.7}) {
        PauliVector r = qubit_evolve(x, {0, 0, 1}, t);
        CHECK(r.a[0] == doctest::Approx(std::cos(2 * t)).epsilon(1e-12));
        CHECK(r.a[1] == doctest::Approx(-std::sin(2 * t)).epsilon(1e-12));
        CHECK(r.a[2] == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("qubit_evolve matches the matrix-exponential oracle") {
    RngStream rng(5, 0);
    for (int trial = 0; trial < 6; ++trial) {
        PauliVector a{rng.next_normal(), {rng.next_normal(), rng.next_normal(), rng.next_normal()}};
        std::array<double, 3> g{rng.next_normal(), rng.next_normal(), rng.next_normal()};
        double t = 0.2 + 0.4 * trial;
        PauliVector mine = qubit_evolve(a, g, t);
        PauliVector ref = evolve_oracle(a, g, t);
        CHECK(mine.a0 == doctest::Approx(ref.a0).epsilon(1e-10));
        for (int i = 0; i < 3; ++i) CHECK(mine.a[i] == doctest::Approx(ref.a[i]).epsilon(1e-10));
    }
}

TEST_CASE("qubit_evolve handles the g -> 0 limit") {
    PauliVector a{0.0, {0.6, -0.1, 0.4}};
    PauliVector zero = qubit_evolve(a, {0, 0, 0}, 2.0);
    for (int i = 0; i < 3; ++i) CHECK(zero.a[i] == doctest::Approx(a.a[i]).epsilon(1e-15));
    // continuity across the series switch: both branches must agree with the
    // matrix-exponential oracle for |g| t near the 1e-6 threshold
    for (double scale : {1e-7, 4e-7, 2e-6, 1e-5}) {
        std::array<double, 3> g{0.5 * scale, -0.7 * scale, 0.4 * scale};
        PauliVector mine = qubit_evolve(a, g, 1.0);
        PauliVector ref = evolve_oracle(a, g, 1.0);
        for (int i = 0; i < 3; ++i) {
            CHECK(mine.a[i] == doctest::Approx(ref.a[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("qubit_f profile") {
    CHECK(qubit_f(0.0) == 0.0);
    double peak = qubit_f(std::sqrt(3.0));
    CHECK(peak == doctest::Approx((2.0 / 3.0) * (1.0 + 2.0 * std::exp(-1.5))).epsilon(1e-14));
    CHECK(peak == doctest::Approx(0.9641).epsilon(1e-3));
    for (double t : {0.5, 1.0, 2.5, 6.0}) CHECK(qubit_f(t) <= peak + 1e-12);
    CHECK(qubit_f(50.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("qubit variance curves") {
    PauliVector z{0.0, {0, 0, 1}};
    auto [vd0, vo0] = qubit_variance_curves(z, 0.0);
    CHECK(vd0 == 0.0);
    CHECK(vo0 == 0.0);
    // trace part does not contribute
    PauliVector z7{7.0, {0, 0, 1}};
    auto [vd_a, vo_a] = qubit_variance_curves(z, 1.3);
    auto [vd_b, vo_b] = qubit_variance_curves(z7, 1.3);
    CHECK(vd_a == vd_b);
    CHECK(vo_a == vo_b);
}

TEST_CASE("qubit matrix-element means") {
    PauliVector z{0.0, {0, 0, 1}};
    QubitMatelMeans m0 = qubit_matel_means(z, 0.0);
    CHECK(m0.diag0 == doctest::Approx(1.0));
    CHECK(m0.diag1 == doctest::Approx(1.0));
    CHECK(m0.offdiag == doctest::Approx(0.0));
    PauliVector x{0.0, {1, 0, 0}};
    for (double t : {0.4, 1.9}) {
        CHECK(qubit_matel_means(x, t).offdiag == doctest::Approx(1.0 - qubit_f(t)).epsilon(1e-14));
    }
}

TEST_CASE("depolarizing_f properties") {
    CHECK_THROWS_AS(depolarizing_f(1.0, 1), InvalidDimensionError);
    for (int n : {2, 4, 8, 16}) {
        CHECK(depolarizing_f(0.0, n).f == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(std::abs(depolarizing_f(10.0 * n, n).f - n / (n + 1.0)) < 0.01);
    }
    for (double t : default_t_grid(2, 64)) {
        CHECK(depolarizing_f(t, 2).f == doctest::Approx(qubit_f(t)).epsilon(1e-12));
    }
}

TEST_CASE("avg_channel_apply") {
    RngStream rng(9, 0);
    const int n = 4;
    CMatrix a = random_hermitian(n, rng);
    CHECK((avg_channel_apply(a, 0.0) - a).norm() < 1e-12);

    CMatrix traceless = a - (a.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
    CMatrix plateau = avg_channel_apply(traceless, 10.0 * n);
    CHECK((plateau - traceless / (n + 1.0)).norm() < 0.02 * traceless.norm());

    for (double t : {0.6, 2.3}) {
        CMatrix out = avg_channel_apply(a, t);
        CHECK(std::abs((out.trace() - a.trace()).real()) < 1e-12);
        CHECK(hermiticity_residual(out) < 1e-12);
        CHECK((avg_channel_apply(a, -t) - out).norm() < 1e-12);
        CMatrix id = CMatrix::Identity(n, n);
        CHECK((avg_channel_apply(id, t) - id).norm() < 1e-12);
    }
    CMatrix bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(avg_channel_apply(bad, 1.0), InvalidInputError);
}

TEST_CASE("twofold coefficients are the identity at t = 0") {
    for (int n = 4; n <= 16; ++n) {
        TwofoldCoefficients c = twofold_coefficients(0.0, n);
        CHECK(std::abs(c.c_ab - 1.0) < 1e-9);
        for (double v : {c.c_ba, c.c_1a, c.c_a1, c.c_tratrb, c.c_trab, c.c_1ab, c.c_s}) {
            CHECK(std::abs(v) < 1e-9);
        }
    }
    // below n = 4 the twelve operators are linearly dependent and the
    // decomposition is no longer unique, but the assembled channel is still
    // exactly A (x) B at t = 0
    RngStream rng(19, 0);
    for (int n : {2, 3}) {
        CMatrix a = random_hermitian(n, rng);
        CMatrix b = random_hermitian(n, rng);
        CMatrix kr(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) kr.block(i * n, j * n, n, n) = a(i, j) * b;
        CHECK((twofold_apply(a, b, 0.0) - kr).norm() < 1e-10 * std::max(1.0, kr.norm()));
    }
    CHECK_THROWS_AS(twofold_coefficients(0.0, 1), InvalidDimensionError);
}

TEST_CASE("twofold_apply basics") {
    RngStream rng(12, 0);
    const int n = 3;
    CMatrix a = random_hermitian(n, rng);
    CMatrix b = random_hermitian(n, rng);
    auto kron = [n](const CMatrix& x, const CMatrix& y) {
        CMatrix out(n * n, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.block(i * n, j * n, n, n) = x(i, j) * y;
        return out;
    };
    CHECK((twofold_apply(a, b, 0.0) - kron(a, b)).norm() < 1e-10);
    CMatrix id = CMatrix::Identity(n, n);
    for (double t : {0.8, 2.9}) {
        CHECK((twofold_apply(id, id, t) - CMatrix::Identity(n * n, n * n)).norm() < 1e-10);
    }
    CHECK_THROWS_AS(twofold_apply(a, random_hermitian(4, rng), 1.0), InvalidInputError);
}

TEST_CASE("twofold marginalization consistency") {
    // tr_2 E[A_G(t) (x) 1_G(t)] = N avg(A, t)
    RngStream rng(14, 0);
    for (int n : {2, 4}) {
        CMatrix a = random_hermitian(n, rng);
        CMatrix id = CMatrix::Identity(n, n);
        for (double t : {0.7, 1.9}) {
            CMatrix two = twofold_apply(a, id, t);
            CMatrix tr2 = CMatrix::Zero(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) tr2(i, j) += two(i * n + k, j * n + k);
            CHECK((tr2 - static_cast<double>(n) * avg_channel_apply(a, t)).norm() <
                  1e-9 * n * std::max(1.0, a.norm()));
        }
    }
}

TEST_CASE("variance operator reproduces the qubit closed form") {
    RngStream rng(15, 0);
    for (double t : {0.5, 1.0, 2.0}) {
        CMatrix a = random_hermitian(2, rng);
        CMatrix var = variance_operator(a, t);
        CMatrix ref = qubit_variance_matrix(pauli_decompose(a), t);
        CHECK((var - ref).norm() < 1e-9);
    }
    // the A = Z case named in the examples
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    for (double t : {0.5, 1.0, 2.0}) {
        CMatrix var = variance_operator(z, t);
        CMatrix ref = qubit_variance_matrix(pauli_decompose(z), t);
        CHECK((var - ref).norm() < 1e-9);
        auto [vd, vo] = qubit_variance_curves(pauli_decompose(z), t);
        CHECK(extract_matel_variance(var, 0, 0, 2) == doctest::Approx(vd).epsilon(1e-9));
        CHECK(extract_matel_variance(var, 0, 1, 2) == doctest::Approx(vo).epsilon(1e-9));
    }
}

TEST_CASE("variance operator vanishes at t = 0 and has nonnegative diagonals") {
    RngStream rng(16, 0);
    for (int n : {2, 3, 5}) {
        CMatrix a = random_hermitian(n, rng);
        CHECK(variance_operator(a, 0.0).norm() < 1e-9 * std::max(1.0, a.squaredNorm()));
        CMatrix var = variance_operator(a, 1.1);
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k) CHECK(extract_matel_variance(var, m, k, n) >= -1e-9);
    }
}

TEST_CASE("variance_matel_gue_avg") {
    CHECK(variance_matel_gue_avg(0, 0, 0.0, 4, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    for (int n : {2, 5, 8}) {
        for (double t : {0.4, 1.3, 6.0}) {
            double diag = variance_matel_gue_avg(0, 0, t, n, 1.0);
            double off = variance_matel_gue_avg(0, 1, t, n, 1.0);
            CHECK(off / diag == doctest::Approx(1.0 / (1.0 - 1.0 / n)).epsilon(1e-12));
        }
    }
    CHECK(variance_matel_gue_avg(0, 1, 1.0, 4, 2.0) ==
          doctest::Approx(4.0 * variance_matel_gue_avg(0, 1, 1.0, 4, 1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(variance_matel_gue_avg(0, 0, 1.0, 4, 0.0), InvalidParameterError);
}

TEST_CASE("typicality") {
    // perfectly typical at zero noise, small in the weak-noise qubit regime
    CHECK(typicality(0, 0, 1e-4, 4) < 1e-3);
    CHECK(typicality(0, 1, 0.2, 2) < 0.35);
    CHECK(typicality(0, 1, 0.05, 8) < typicality(0, 1, 0.2, 8));
    CHECK(typicality(0, 1, 1e-3, 8) < 1e-2);
    // the N = 2 diagonal saturates at exactly 1 on the plateau
    CHECK(typicality(0, 0, 6.0, 2) == doctest::Approx(1.0).epsilon(1e-5));
    // off-diagonal saturates at sqrt(8) instead
    CHECK(typicality(0, 1, 6.0, 2) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-4));
}

TEST_CASE("twofold channel matches MC at low n") {
    RngStream rng(18, 0);
    const int n = 3;
    CMatrix a = random_hermitian(n, rng);
    CMatrix b = random_hermitian(n, rng);
    double t = 1.0;
    CMatrix ref = twofold_apply(a, b, t);
    McMatrixEstimate mc = mc_twofold(a, b, t, 20000, RngStream(18, 1));
    int ok = 0, total = 0;
    for (int i = 0; i < n * n; ++i)
        for (int j = 0; j < n * n; ++j, ++total)
            if (mc.entry_agrees(i, j, ref(i, j), 4.0)) ++ok;
    CHECK(ok >= static_cast<int>(0.95 * total));
}

TEST_CASE("f stays in [0, 1) with a nonmonotonic profile up to N = 64") {
    for (int n : {48, 64}) {
        double fmax_seen = -1.0;
        bool nonmono = false;
        for (double t : default_t_grid(n, 96)) {
            double f = depolarizing_f(t, n).f;
            CHECK(f >= 0.0);
            CHECK(f < 1.0);
            if (f < fmax_seen - 1e-9) nonmono = true;
            fmax_seen = std::max(fmax_seen, f);
        }
        CHECK(nonmono);
    }
}
