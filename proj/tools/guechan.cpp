// Command-line front end: exact finite-N GUE spectral form factors, the
// ensemble-averaged noisy channel curves, and the analytic-vs-MC validation
// suite. Emits plot-ready CSV or JSON tables.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "guechan/channels.hpp"
#include "guechan/error.hpp"
#include "guechan/output.hpp"
#include "guechan/parallel.hpp"
#include "guechan/sff.hpp"
#include "guechan/validate.hpp"

namespace {

using namespace guechan;

struct SweepConfig {
    int n = 2;
    double t_min = 1e-2;
    double t_max = -1.0;   // default 10 n, resolved later
    int points = 256;
    std::string grid = "geometric";
    long samples = -1;     // default 1e5 for n <= 16, else 1e4
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string output;

    long sample_count() const {
        if (samples > 0) return samples;
        return n <= 16 ? 100000 : 10000;
    }
};

void add_common(CLI::App* cmd, SweepConfig& cfg, bool with_samples) {
    cmd->add_option("--n", cfg.n, "Hilbert-space dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--t-min", cfg.t_min, "sweep start (geometric grids exclude 0; it is prepended)");
    cmd->add_option("--t-max", cfg.t_max, "sweep end (default 10 n)");
    cmd->add_option("--points", cfg.points, "grid size")->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--grid", cfg.grid, "grid spacing: geometric | linear")
        ->check(CLI::IsMember({"geometric", "linear"}));
    if (with_samples) {
        cmd->add_option("--samples", cfg.samples,
                        "Monte Carlo sample count (default 1e5 for n <= 16, else 1e4)")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--seed", cfg.seed, "RNG seed (reruns with the same seed are bit-identical)");
    cmd->add_option("--format", cfg.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", cfg.output, "output path (stdout if omitted)");
}

std::vector<double> make_grid(const SweepConfig& cfg) {
    double tmax = cfg.t_max > 0 ? cfg.t_max : 10.0 * cfg.n;
    if (!(cfg.t_min < tmax)) throw InvalidParameterError("need t_min < t_max");
    std::vector<double> t;
    t.reserve(cfg.points);
    if (cfg.grid == "linear") {
        for (int i = 0; i < cfg.points; ++i) {
            t.push_back(cfg.t_min + (tmax - cfg.t_min) * i / (cfg.points - 1.0));
        }
    } else {
        if (!(cfg.t_min > 0)) throw InvalidParameterError("geometric grid needs t_min > 0");
        t.push_back(0.0);
        int m = cfg.points - 1;
        for (int i = 0; i < m; ++i) {
            double frac = (m == 1) ? 0.0 : static_cast<double>(i) / (m - 1);
            t.push_back(cfg.t_min * std::pow(tmax / cfg.t_min, frac));
        }
    }
    return t;
}

void emit(const SweepConfig& cfg, const std::vector<CurveTable>& tables) {
    if (cfg.output.empty()) {
        for (const auto& tab : tables) {
            if (cfg.format == "json") {
                std::cout << to_json(tab);
            } else {
                if (tables.size() > 1) std::cout << "# curve: " << tab.kind << "\n";
                std::cout << to_csv(tab);
            }
            if (tables.size() > 1) std::cout << "\n";
        }
        return;
    }
    for (const auto& tab : tables) {
        std::string path = cfg.output;
        if (tables.size() > 1) {
            auto dot = path.rfind('.');
            std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
            std::string ext = dot == std::string::npos ? "" : path.substr(dot);
            path = stem + "_" + tab.kind + ext;
        }
        write_file_atomic(path, cfg.format == "json" ? to_json(tab) : to_csv(tab));
        std::cerr << "wrote " << path << "\n";
    }
}

CurveTable base_table(const SweepConfig& cfg, std::string kind, std::vector<double> t) {
    CurveTable tab;
    tab.kind = std::move(kind);
    tab.n = cfg.n;
    tab.grid = cfg.grid;
    tab.seed = cfg.seed;
    tab.t = std::move(t);
    return tab;
}

int cmd_sff(const SweepConfig& cfg, const std::string& kind, int p, std::vector<int> q) {
    auto grid = make_grid(cfg);
    CurveTable tab = base_table(cfg, kind, grid);
    if (kind == "mc") {
        SffCurve c = sff_mc_curve(p, q, cfg.n, grid, cfg.sample_count(), RngStream(cfg.seed, 0));
        tab.value = c.values;
        tab.std_error = c.std_errors;
    } else {
        SffKind k = kind == "r2" ? SffKind::R2 : (kind == "r41" ? SffKind::R41 : SffKind::R4);
        SffCurve c = sff_curve(k, cfg.n, grid);
        tab.value = c.values;
        int pw = k == SffKind::R2 ? 2 : (k == SffKind::R41 ? 3 : 4);
        tab.norm = std::pow(static_cast<double>(cfg.n), pw);
        tab.norm_label = "value/N^" + std::to_string(pw);
    }
    emit(cfg, {tab});
    return 0;
}

int cmd_channel(const SweepConfig& cfg) {
    auto grid = make_grid(cfg);
    CurveTable tab = base_table(cfg, "f", grid);
    tab.value.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { tab.value[i] = depolarizing_f(grid[i], cfg.n).f; });
    emit(cfg, {tab});
    return 0;
}

int cmd_variance(const SweepConfig& cfg, double sigma_a) {
    auto grid = make_grid(cfg);
    CurveTable d = base_table(cfg, "var_diag", grid);
    CurveTable o = base_table(cfg, "var_offdiag", grid);
    d.value.resize(grid.size());
    o.value.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        d.value[i] = variance_matel_gue_avg(0, 0, grid[i], cfg.n, sigma_a);
        o.value[i] = variance_matel_gue_avg(0, 1, grid[i], cfg.n, sigma_a);
    });
    emit(cfg, {d, o});
    return 0;
}

int cmd_typicality(const SweepConfig& cfg) {
    auto grid = make_grid(cfg);
    CurveTable d = base_table(cfg, "typ_diag", grid);
    CurveTable o = base_table(cfg, "typ_offdiag", grid);
    d.value.resize(grid.size());
    o.value.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        d.value[i] = typicality(0, 0, grid[i], cfg.n);
        o.value[i] = typicality(0, 1, grid[i], cfg.n);
    });
    emit(cfg, {d, o});
    return 0;
}

int cmd_qubit(const SweepConfig& cfg, const PauliVector& a, const std::string& which) {
    SweepConfig q = cfg;
    q.n = 2;
    if (cfg.t_max <= 0) q.t_max = 8.0;
    auto grid = make_grid(q);
    std::vector<CurveTable> tabs;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    if (want("f")) {
        CurveTable tab = base_table(q, "f", grid);
        for (double t : grid) tab.value.push_back(qubit_f(t));
        tabs.push_back(tab);
    }
    if (want("std_diag") || want("std_offdiag")) {
        CurveTable d = base_table(q, "std_diag", grid);
        CurveTable o = base_table(q, "std_offdiag", grid);
        for (double t : grid) {
            auto [vd, vo] = qubit_variance_curves(a, t);
            d.value.push_back(std::sqrt(std::max(0.0, vd)));
            o.value.push_back(std::sqrt(std::max(0.0, vo)));
        }
        if (want("std_diag")) tabs.push_back(d);
        if (want("std_offdiag")) tabs.push_back(o);
    }
    if (want("mean_diag") || want("mean_offdiag")) {
        CurveTable d = base_table(q, "mean_diag", grid);
        CurveTable o = base_table(q, "mean_offdiag", grid);
        for (double t : grid) {
            QubitMatelMeans m = qubit_matel_means(a, t);
            d.value.push_back(m.diag0);
            o.value.push_back(m.offdiag);
        }
        if (want("mean_diag")) tabs.push_back(d);
        if (want("mean_offdiag")) tabs.push_back(o);
    }
    if (want("typ_diag") || want("typ_offdiag")) {
        // A = Z for diagonal typicality, A = X for off-diagonal; these
        // choices keep the means nonzero
        PauliVector az;
        az.a[2] = 1.0;
        PauliVector ax;
        ax.a[0] = 1.0;
        CurveTable d = base_table(q, "typ_diag", grid);
        CurveTable o = base_table(q, "typ_offdiag", grid);
        for (double t : grid) {
            auto [vd_z, vo_z] = qubit_variance_curves(az, t);
            auto [vd_x, vo_x] = qubit_variance_curves(ax, t);
            QubitMatelMeans mz = qubit_matel_means(az, t);
            QubitMatelMeans mx = qubit_matel_means(ax, t);
            d.value.push_back(mz.diag0 > 0 ? std::sqrt(std::max(0.0, vd_z)) / mz.diag0 : 0.0);
            o.value.push_back(mx.offdiag > 0 ? std::sqrt(std::max(0.0, vo_x)) / mx.offdiag : 0.0);
        }
        if (want("typ_diag")) tabs.push_back(d);
        if (want("typ_offdiag")) tabs.push_back(o);
    }
    emit(q, tabs);
    return 0;
}

int cmd_validate(const SweepConfig& cfg) {
    ValidationReport report = run_validation(cfg.n, cfg.sample_count(), cfg.seed);
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
    }
    if (!report.all_pass()) {
        std::cout << "validation FAILED\n";
        return 1;
    }
    std::cout << "validation passed (n=" << cfg.n << ", samples=" << cfg.sample_count()
              << ", seed=" << cfg.seed << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-N GUE spectral form factors and noisy-channel curves"};
    app.require_subcommand(1);

    SweepConfig cfg;
    std::string sff_kind = "r2";
    int mc_p = 1;
    std::vector<int> mc_q;
    double sigma_a = 1.0;
    PauliVector qubit_a;
    qubit_a.a[2] = 1.0;
    std::string qubit_curve = "all";

    CLI::App* sff = app.add_subcommand("sff", "spectral form factor sweep (exact or MC)");
    add_common(sff, cfg, true);
    sff->add_option("--kind", sff_kind, "r2 | r41 | r4 | mc")
        ->check(CLI::IsMember({"r2", "r41", "r4", "mc"}));
    sff->add_option("--p", mc_p, "MC moment order p (kind=mc)");
    sff->add_option("--q", mc_q, "MC coincidence counts q_i (kind=mc, repeatable)");

    CLI::App* channel = app.add_subcommand("channel", "depolarizing amplitude f(t)");
    add_common(channel, cfg, false);

    CLI::App* variance = app.add_subcommand("variance", "matrix-element variance curves (GUE-averaged A)");
    add_common(variance, cfg, false);
    variance->add_option("--sigma-a", sigma_a, "width of the observable ensemble")
        ->check(CLI::PositiveNumber);

    CLI::App* typ = app.add_subcommand("typicality", "std/mean typicality curves");
    add_common(typ, cfg, false);

    CLI::App* qubit = app.add_subcommand("qubit", "single-qubit closed-form curves");
    add_common(qubit, cfg, false);
    qubit->add_option("--a0", qubit_a.a0, "trace part of A");
    qubit->add_option("--ax", qubit_a.a[0], "Pauli-x component of A");
    qubit->add_option("--ay", qubit_a.a[1], "Pauli-y component of A");
    qubit->add_option("--az", qubit_a.a[2], "Pauli-z component of A (default A = Z)");
    qubit->add_option("--curve", qubit_curve,
                      "all | f | std_diag | std_offdiag | mean_diag | mean_offdiag | typ_diag | typ_offdiag");

    CLI::App* validate = app.add_subcommand("validate", "analytic-vs-MC validation suite");
    add_common(validate, cfg, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sff->parsed()) return cmd_sff(cfg, sff_kind, mc_p, mc_q);
        if (channel->parsed()) return cmd_channel(cfg);
        if (variance->parsed()) return cmd_variance(cfg, sigma_a);
        if (typ->parsed()) return cmd_typicality(cfg);
        if (qubit->parsed()) return cmd_qubit(cfg, qubit_a, qubit_curve);
        if (validate->parsed()) return cmd_validate(cfg);
    } catch (const guechan::InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const guechan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
