#include "guechan/sff.hpp"

#include <cmath>
#include <string>

#include "guechan/accum.hpp"
#include "guechan/error.hpp"
#include "guechan/oscillator.hpp"
#include "guechan/parallel.hpp"

namespace guechan {

namespace {

// Imaginary residue policy: every bracket below is analytically real (the
// spectrum is symmetric under lambda -> -lambda and the kernel is invariant),
// so a sizable imaginary part signals a numerical inconsistency rather than
// something to truncate.
double real_checked(Complex z, const char* what) {
    double scale = std::max(1.0, std::abs(z.real()));
    if (!(std::abs(z.imag()) <= 1e-9 * scale)) {
        throw NumericConsistencyError(std::string(what) + ": imaginary residue " +
                                      std::to_string(z.imag()) + " at magnitude " +
                                      std::to_string(z.real()));
    }
    return z.real();
}

double falling(int n, int k) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= (n - j);
    return p;
}

}  // namespace

std::vector<double> default_t_grid(int n, int points) {
    if (points < 2) throw InvalidParameterError("default_t_grid: points must be >= 2");
    std::vector<double> t;
    t.reserve(points);
    t.push_back(0.0);
    const double lo = 1e-2, hi = 10.0 * n;
    const int m = points - 1;
    for (int i = 0; i < m; ++i) {
        double frac = (m == 1) ? 0.0 : static_cast<double>(i) / (m - 1);
        t.push_back(lo * std::pow(hi / lo, frac));
    }
    return t;
}

double s2_bracket(double t, int n) {
    if (n < 1) throw InvalidDimensionError("s2_bracket: n must be >= 1");
    XMatrix x = x_matrix(t, n);
    double i1 = diag_sum(t, n).real();
    double off = x.entries.squaredNorm();  // tr[X(t) X(-t)] = sum |X_mn|^2
    return i1 * i1 - off;
}

double s41_bracket(double t, int n) {
    if (n < 1) throw InvalidDimensionError("s41_bracket: n must be >= 1");
    if (n < 3) return 0.0;  // empty sum over three distinct indices
    CMatrix x1 = x_matrix(t, n).entries;
    CMatrix xm2 = x_matrix(-2.0 * t, n).entries;
    double i1 = diag_sum(t, n).real();
    double i2 = diag_sum(2.0 * t, n).real();
    Complex v = i1 * i1 * i2 + 2.0 * (x1 * x1 * xm2).trace() -
                2.0 * i1 * (x1 * xm2).trace() - i2 * (x1 * x1).trace();
    return real_checked(v, "s41_bracket");
}

double s4_bracket(double t, int n) {
    if (n < 1) throw InvalidDimensionError("s4_bracket: n must be >= 1");
    if (n < 4) return 0.0;  // empty sum over four distinct indices
    CMatrix x = x_matrix(t, n).entries;
    CMatrix xc = x.conjugate();  // X(-t)
    double i1 = diag_sum(t, n).real();
    Complex tr_x2 = (x * x).trace();
    Complex tr_xxc = (x * xc).trace();
    Complex tr_x2xc = (x * x * xc).trace();
    Complex tr_x2xc2 = (x * x * xc * xc).trace();
    Complex tr_xcx2 = (x * xc * x * xc).trace();
    Complex v = std::pow(i1, 4) - 2.0 * i1 * i1 * tr_x2 - 4.0 * i1 * i1 * tr_xxc +
                8.0 * i1 * tr_x2xc + 2.0 * tr_xxc * tr_xxc + tr_x2 * tr_x2 -
                4.0 * tr_x2xc2 - 2.0 * tr_xcx2;
    return real_checked(v, "s4_bracket");
}

double kappa2(double t, int n) {
    if (n < 2) throw InvalidDimensionError("kappa2: n must be >= 2");
    return s2_bracket(t, n) / falling(n, 2);
}

double kappa41(double t, int n) {
    if (n < 3) throw InvalidDimensionError("kappa41: n must be >= 3");
    return s41_bracket(t, n) / falling(n, 3);
}

double kappa4(double t, int n) {
    if (n < 4) throw InvalidDimensionError("kappa4: n must be >= 4");
    return s4_bracket(t, n) / falling(n, 4);
}

double sff2(double t, int n) {
    if (n < 1) throw InvalidDimensionError("sff2: n must be >= 1");
    return n + s2_bracket(t, n);
}

double sff41_any(double t, int n) {
    if (n < 1) throw InvalidDimensionError("sff41_any: n must be >= 1");
    return n + 2.0 * s2_bracket(t, n) + s2_bracket(2.0 * t, n) + s41_bracket(t, n);
}

double sff4_any(double t, int n) {
    if (n < 1) throw InvalidDimensionError("sff4_any: n must be >= 1");
    return n * (2.0 * n - 1.0) + 4.0 * (n - 1.0) * s2_bracket(t, n) + s2_bracket(2.0 * t, n) +
           2.0 * s41_bracket(t, n) + s4_bracket(t, n);
}

double sff41(double t, int n) {
    if (n < 3) {
        throw UnsupportedDimensionError(
            "sff41: the nonrepeating-eigenvalue expansion needs n >= 3; "
            "use the MC estimator (sff_mc with p=2, q={1}) for smaller n");
    }
    return sff41_any(t, n);
}

double sff4(double t, int n) {
    if (n < 4) {
        throw UnsupportedDimensionError(
            "sff4: the nonrepeating-eigenvalue expansion needs n >= 4; "
            "use the MC estimator (sff_mc with p=2, q={}) for smaller n");
    }
    return sff4_any(t, n);
}

double sff2_laguerre_form(double t, int n) {
    if (n < 1) throw InvalidDimensionError("sff2_laguerre_form: n must be >= 1");
    double x = 0.5 * t * t;
    double l1 = laguerre(n - 1, 1, x);
    double dsum = 0.0;
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) {
            double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
            dsum += sign * laguerre(k, m - k, x) * laguerre(m, k - m, x);
        }
    }
    return n + std::exp(-x) * (l1 * l1 - dsum);
}

SffCurve sff_curve(SffKind kind, int n, const std::vector<double>& t_grid) {
    SffCurve c;
    c.kind = kind;
    c.n = n;
    c.t_grid = t_grid;
    c.values.resize(t_grid.size());
    parallel_for(t_grid.size(), [&](std::size_t i) {
        switch (kind) {
            case SffKind::R2: c.values[i] = sff2(t_grid[i], n); break;
            case SffKind::R41: c.values[i] = sff41(t_grid[i], n); break;
            case SffKind::R4: c.values[i] = sff4(t_grid[i], n); break;
            default: throw InvalidParameterError("sff_curve: MC kind needs sff_mc_curve");
        }
    });
    return c;
}

namespace {

struct McMoment {
    int p = 0;
    int conj_power = 0;       // power of Z*(t)
    std::vector<int> merged;  // arguments of merged factors, units of t
};

McMoment mc_moment(int p, const std::vector<int>& q) {
    if (p < 1) throw InvalidParameterError("sff_mc: p must be >= 1");
    int qsum = 0;
    for (int qi : q) {
        if (qi < 1) throw InvalidParameterError("sff_mc: q entries must be >= 1");
        qsum += qi;
    }
    if (qsum >= p) throw InvalidParameterError("sff_mc: requires sum(q) < p");
    int conj_power = p - qsum - static_cast<int>(q.size());
    if (conj_power < 0) {
        throw InvalidParameterError("sff_mc: requires sum(q_i + 1) <= p");
    }
    McMoment m;
    m.p = p;
    m.conj_power = conj_power;
    for (int qi : q) m.merged.push_back(qi + 1);
    return m;
}

// One draw's contribution Z(t)^p Z*(t)^a prod Z*(m_i t) from its eigenvalues.
Complex mc_sample_value(const McMoment& m, const RVector& eigs, double t) {
    auto ztrace = [&](double arg) {
        Complex z(0, 0);
        for (int k = 0; k < eigs.size(); ++k) {
            double ph = -arg * eigs[k];
            z += Complex(std::cos(ph), std::sin(ph));
        }
        return z;
    };
    Complex z1 = ztrace(t);
    Complex v(1, 0);
    for (int j = 0; j < m.p; ++j) v *= z1;
    Complex z1c = std::conj(z1);
    for (int j = 0; j < m.conj_power; ++j) v *= z1c;
    for (int mi : m.merged) v *= std::conj(ztrace(mi * t));
    return v;
}



}  // namespace

SffCurve sff_mc_curve(int p, const std::vector<int>& q, int n,
                      const std::vector<double>& t_grid, long samples, const RngStream& rng) {
    if (n < 1) throw InvalidDimensionError("sff_mc_curve: n must be >= 1");
    if (samples < 2) throw InvalidParameterError("sff_mc_curve: samples must be >= 2");
    McMoment moment = mc_moment(p, q);

    const long batch = 1024;
    const long nbatches = (samples + batch - 1) / batch;
    std::vector<std::vector<ComplexAccumulator>> acc(nbatches,
                                           std::vector<ComplexAccumulator>(t_grid.size()));
    parallel_for(static_cast<std::size_t>(nbatches), [&](std::size_t b) {
        RngStream sub = rng.substream(static_cast<std::uint64_t>(b));
        long lo = b * batch;
        long hi = std::min<long>(samples, lo + batch);
        for (long s = lo; s < hi; ++s) {
            CMatrix g = sample_gue(n, sub);
            Eigen::SelfAdjointEigenSolver<CMatrix> solver(g, Eigen::EigenvaluesOnly);
            if (solver.info() != Eigen::Success) {
                throw NumericError("sff_mc: eigenvalue solve failed");
            }
            RVector eigs = solver.eigenvalues();
            for (std::size_t i = 0; i < t_grid.size(); ++i) {
                acc[b][i].add(mc_sample_value(moment, eigs, t_grid[i]));
            }
        }
    });
    SffCurve c;
    c.kind = SffKind::MC;
    c.n = n;
    c.t_grid = t_grid;
    c.mc_p = p;
    c.mc_q = q;
    c.values.resize(t_grid.size());
    c.std_errors.resize(t_grid.size());
    c.imag_means.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        ComplexAccumulator total;
        for (long b = 0; b < nbatches; ++b) total.merge(acc[b][i]);
        c.values[i] = total.mean_re;
        c.std_errors[i] = total.se_re();
        c.imag_means[i] = total.mean_im;
    }
    return c;
}

McSffPoint sff_mc(int p, const std::vector<int>& q, double t, int n, long samples,
                  const RngStream& rng) {
    SffCurve c = sff_mc_curve(p, q, n, {t}, samples, rng);
    McSffPoint pt;
    pt.estimate = c.values[0];
    pt.std_error = c.std_errors[0];
    pt.imag_part = c.imag_means[0];
    pt.samples = samples;
    return pt;
}

std::string sff_kind_name(SffKind kind) {
    switch (kind) {
        case SffKind::R2: return "r2";
        case SffKind::R41: return "r41";
        case SffKind::R4: return "r4";
        case SffKind::MC: return "mc";
    }
    return "unknown";
}

}  // namespace guechan
