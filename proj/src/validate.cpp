#include "guechan/validate.hpp"

#include <cmath>
#include <sstream>

#include "guechan/channels.hpp"
#include "guechan/error.hpp"
#include "guechan/mc_oracle.hpp"
#include "guechan/oscillator.hpp"
#include "guechan/sff.hpp"
#include "guechan/weingarten.hpp"

namespace guechan {

namespace {

std::vector<double> grid64(int n) { return default_t_grid(n, 64); }

CMatrix seeded_hermitian(int n, RngStream& rng) {
    CMatrix x(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) x(i, j) = Complex(rng.next_normal(), rng.next_normal());
    CMatrix a = 0.5 * (x + x.adjoint());
    for (int i = 0; i < n; ++i) a(i, i) = Complex(a(i, i).real(), 0.0);
    return a;
}

double analytic_sff(int p, const std::vector<int>& q, double t, int n) {
    if (p == 1 && q.empty()) return sff2(t, n);
    if (p == 2 && q == std::vector<int>{1}) return sff41_any(t, n);
    if (p == 2 && q.empty()) return sff4_any(t, n);
    throw InvalidParameterError("no analytic reference for this (p, q)");
}

CheckResult check_sff_mc(int n, long samples, std::uint64_t seed, int p,
                         const std::vector<int>& q, const std::string& label) {
    auto grid = grid64(n);
    RngStream rng(seed, p * 100 + static_cast<int>(q.size()));
    SffCurve mc = sff_mc_curve(p, q, n, grid, samples, rng);
    int ok = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double ref = analytic_sff(p, q, grid[i], n);
        double tol = 4.0 * mc.std_errors[i] + 1e-9;
        double dev = std::abs(mc.values[i] - ref);
        if (dev <= tol) ++ok;
        worst = std::max(worst, mc.std_errors[i] > 0 ? dev / mc.std_errors[i] : 0.0);
    }
    double frac = static_cast<double>(ok) / grid.size();
    std::ostringstream det;
    det << ok << "/" << grid.size() << " points within 4 std errors (worst " << worst
        << " sigma)";
    return {label, frac >= 0.95, det.str()};
}

CheckResult check_channel_mc(int n, long samples, std::uint64_t seed) {
    RngStream arng(seed, 777);
    CMatrix a = seeded_hermitian(n, arng);
    int total = 0, ok = 0;
    for (double t : {0.3, 1.0, 3.0}) {
        CMatrix ref = avg_channel_apply(a, t);
        McMatrixEstimate mc = mc_channel_average(a, t, samples, RngStream(seed, 800 + (int)(10 * t)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++total)
                if (mc.entry_agrees(i, j, ref(i, j), 4.0)) ++ok;
    }
    std::ostringstream det;
    det << ok << "/" << total << " entries within 4 std errors";
    return {"channel_mc_agreement", ok >= static_cast<int>(0.95 * total), det.str()};
}

CheckResult check_twofold_mc(int n, long samples, std::uint64_t seed) {
    RngStream arng(seed, 778);
    CMatrix a = seeded_hermitian(n, arng);
    CMatrix b = seeded_hermitian(n, arng);
    int total = 0, ok = 0;
    for (double t : {0.3, 1.0, 3.0}) {
        CMatrix ref = twofold_apply(a, b, t);
        McMatrixEstimate mc = mc_twofold(a, b, t, samples, RngStream(seed, 900 + (int)(10 * t)));
        for (int i = 0; i < n * n; ++i)
            for (int j = 0; j < n * n; ++j, ++total)
                if (mc.entry_agrees(i, j, ref(i, j), 4.0)) ++ok;
    }
    std::ostringstream det;
    det << ok << "/" << total << " entries within 4 std errors";
    return {"twofold_mc_agreement", ok >= static_cast<int>(0.95 * total), det.str()};
}

CheckResult check_variance_formula(int n, long samples, std::uint64_t seed) {
    long a_samples = std::max<long>(64, samples / 500);
    long g_samples = std::max<long>(256, samples / 100);
    bool pass = true;
    std::ostringstream det;
    for (double t : {0.5, 1.0, 2.0}) {
        for (int offd = 0; offd < 2; ++offd) {
            int mi = 0, ni = offd ? 1 : 0;
            double ref = variance_matel_gue_avg(mi, ni, t, n, 1.0);
            McScalarEstimate mc = mc_variance_matel(
                mi, ni, t, n, 1.0, a_samples, g_samples,
                RngStream(seed, 1000 + 10 * static_cast<int>(t * 2) + offd));
            double dev = std::abs(mc.mean - ref);
            bool this_ok = dev <= 4.0 * mc.std_error + 1e-9;
            pass = pass && this_ok;
            if (!this_ok) {
                det << "t=" << t << (offd ? " offdiag" : " diag") << ": dev " << dev << " vs se "
                    << mc.std_error << "; ";
            }
        }
    }
    if (pass) det << "all diag/offdiag points within 4 std errors";
    return {"variance_formula_nested_mc", pass, det.str()};
}

CheckResult check_weingarten(int n, long samples, std::uint64_t seed) {
    bool pass = true;
    std::ostringstream det;
    int n2 = std::max(n, 2);
    WeingartenTable t2 = weingarten_table(2, n2);
    double d1 = std::abs(t2.values.at({1, 1}) - 1.0 / (static_cast<double>(n2) * n2 - 1.0));
    double d2 = std::abs(t2.values.at({2}) + 1.0 / (n2 * (static_cast<double>(n2) * n2 - 1.0)));
    pass = pass && d1 < 1e-13 && d2 < 1e-13;
    int n4 = std::max(n, 4);
    WeingartenTable t4 = weingarten_table(4, n4);
    double worst4 = 0.0;
    for (const auto& [cls, val] : t4.values) {
        worst4 = std::max(worst4, std::abs(val - weingarten_closed_form(cls, n4)));
    }
    pass = pass && worst4 < 1e-13;
    double gram = std::max(gram_identity_residual(t2), gram_identity_residual(t4));
    pass = pass && gram < 1e-10;
    double dev = haar_mc_validate(2, std::min(n2, 6), samples / 10 + 100, RngStream(seed, 4));
    double haar_tol = 4.0 / std::sqrt(static_cast<double>(samples / 10 + 100));
    pass = pass && dev < haar_tol;
    det << "closed-form dev " << std::max({d1, d2, worst4}) << ", gram residual " << gram
        << ", haar mc dev " << dev << " (tol " << haar_tol << ")";
    return {"weingarten", pass, det.str()};
}

CheckResult check_properties(int n, std::uint64_t seed) {
    bool pass = true;
    std::ostringstream det;
    auto grid = grid64(n);

    // evenness in t
    double worst_even = 0.0;
    for (double t : {0.37, 1.21, 4.9}) {
        worst_even = std::max(worst_even, std::abs(sff2(t, n) - sff2(-t, n)));
    }
    pass = pass && worst_even < 1e-12 * n * n;

    // f range and nonmonotonicity over the full grid
    double fmin = 1e300, fmax = -1e300;
    bool nonmono = false;
    double prev = 0.0;
    bool rising_seen = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double f = depolarizing_f(grid[i], n).f;
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
        if (i > 0 && f > prev + 1e-12) rising_seen = true;
        if (i > 0 && rising_seen && f < prev - 1e-9) nonmono = true;
        prev = f;
    }
    pass = pass && fmin >= 0.0 && fmax < 1.0 && nonmono;

    // trace/hermiticity preservation and unitality
    RngStream arng(seed, 5);
    CMatrix a = seeded_hermitian(n, arng);
    for (double t : {0.5, 2.0}) {
        CMatrix out = avg_channel_apply(a, t);
        pass = pass && std::abs((out.trace() - a.trace()).real()) < 1e-12 * std::abs(a.trace().real() + 1.0);
        pass = pass && hermiticity_residual(out) < 1e-12 * std::max(1.0, out.norm());
        CMatrix id = CMatrix::Identity(n, n);
        pass = pass && (avg_channel_apply(id, t) - id).norm() < 1e-12 * n;
        pass = pass && (avg_channel_apply(a, t) - avg_channel_apply(a, -t)).norm() < 1e-12 * a.norm();
    }

    // X-matrix conjugation symmetry
    double worst_conj = 0.0;
    for (double t : {0.9, 3.1}) {
        XMatrix xp = x_matrix(t, n);
        XMatrix xm = x_matrix(-t, n);
        worst_conj = std::max(worst_conj, (xm.entries - xp.entries.conjugate()).norm());
    }
    pass = pass && worst_conj < 1e-13 * n;

    det << "evenness " << worst_even << ", f in [" << fmin << ", " << fmax << "], nonmonotonic "
        << (nonmono ? "yes" : "no") << ", conj residual " << worst_conj;
    return {"property_suite", pass, det.str()};
}

CheckResult check_qubit_consistency(int n) {
    if (n != 2) return {"qubit_consistency", true, "skipped (n != 2)"};
    double worst = 0.0;
    for (double t : default_t_grid(2, 64)) {
        worst = std::max(worst, std::abs(depolarizing_f(t, 2).f - qubit_f(t)));
    }
    std::ostringstream det;
    det << "max |f_general - f_qubit| = " << worst;
    return {"qubit_consistency", worst < 1e-12, det.str()};
}

}  // namespace

ValidationReport run_validation(int n, long samples, std::uint64_t seed) {
    if (n < 2) throw InvalidDimensionError("run_validation: n must be >= 2");
    ValidationReport report;
    report.checks.push_back(check_weingarten(n, samples, seed));
    report.checks.push_back(check_sff_mc(n, samples, seed, 1, {}, "sff_mc_r2"));
    report.checks.push_back(check_sff_mc(n, samples, seed, 2, {1}, "sff_mc_r41"));
    report.checks.push_back(check_sff_mc(n, samples, seed, 2, {}, "sff_mc_r4"));
    report.checks.push_back(check_channel_mc(n, samples, seed));
    report.checks.push_back(check_twofold_mc(n, samples, seed));
    report.checks.push_back(check_variance_formula(n, samples, seed));
    report.checks.push_back(check_properties(n, seed));
    report.checks.push_back(check_qubit_consistency(n));
    return report;
}

}  // namespace guechan
