#include "guechan/weingarten.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "guechan/error.hpp"
#include "guechan/mc_oracle.hpp"
#include "guechan/parallel.hpp"

namespace guechan {

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> compose_inv(const std::vector<int>& a, const std::vector<int>& b) {
    // a * b^-1 in one-line notation: (a b^-1)(i) = a[b^-1[i]]
    int m = static_cast<int>(a.size());
    std::vector<int> binv(m), r(m);
    for (int i = 0; i < m; ++i) binv[b[i]] = i;
    for (int i = 0; i < m; ++i) r[i] = a[binv[i]];
    return r;
}

CyclePartition cycle_type_unchecked(const std::vector<int>& perm) {
    int m = static_cast<int>(perm.size());
    std::vector<bool> seen(m, false);
    CyclePartition parts;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

}  // namespace

CyclePartition cycle_type(const std::vector<int>& perm) {
    int m = static_cast<int>(perm.size());
    if (m == 0) throw InvalidInputError("cycle_type: empty permutation");
    std::vector<bool> hit(m, false);
    for (int v : perm) {
        if (v < 0 || v >= m || hit[v]) {
            throw InvalidInputError("cycle_type: not a bijection on {0..m-1}");
        }
        hit[v] = true;
    }
    return cycle_type_unchecked(perm);
}

WeingartenTable weingarten_table(int order, int n) {
    if (order < 1 || order > 6) {
        throw UnsupportedOrderError("weingarten_table: order must be in 1..6 (|S_6| = 720)");
    }
    if (n < order) {
        throw UnsupportedRegimeError(
            "weingarten_table: requires n >= order; the Gram matrix is singular below that "
            "(low-dimension channels handle the cancellation downstream)");
    }
    auto perms = all_permutations(order);
    // classes and representatives
    std::vector<CyclePartition> classes;
    std::vector<std::vector<int>> reps;
    for (const auto& p : perms) {
        CyclePartition c = cycle_type_unchecked(p);
        if (std::find(classes.begin(), classes.end(), c) == classes.end()) {
            classes.push_back(c);
            reps.push_back(p);
        }
    }
    int nc = static_cast<int>(classes.size());
    auto class_index = [&](const CyclePartition& c) {
        return static_cast<int>(std::find(classes.begin(), classes.end(), c) - classes.begin());
    };
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nc, nc);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nc);
    CyclePartition id_class(order, 1);
    for (int r = 0; r < nc; ++r) {
        for (const auto& tau : perms) {
            auto st = compose_inv(reps[r], tau);
            int cycles = static_cast<int>(cycle_type_unchecked(st).size());
            gram(r, class_index(cycle_type_unchecked(tau))) += std::pow(static_cast<double>(n), cycles);
        }
        rhs(r) = (classes[r] == id_class) ? 1.0 : 0.0;
    }
    Eigen::VectorXd wg = gram.fullPivLu().solve(rhs);
    WeingartenTable table;
    table.order = order;
    table.n = n;
    for (int i = 0; i < nc; ++i) table.values[classes[i]] = wg(i);
    return table;
}

double weingarten_closed_form(const CyclePartition& partition, int n) {
    int m = 0;
    for (int p : partition) m += p;
    double nn = n;
    double d2 = nn * nn - 1.0;
    double d3 = nn * nn - 4.0;
    double d4 = nn * nn - 9.0;
    const CyclePartition& c = partition;
    if (m == 1) return 1.0 / nn;
    if (m == 2) {
        if (c == CyclePartition{1, 1}) return 1.0 / d2;
        if (c == CyclePartition{2}) return -1.0 / (nn * d2);
    }
    if (m == 3) {
        if (c == CyclePartition{1, 1, 1}) return (nn * nn - 2.0) / (nn * d2 * d3);
        if (c == CyclePartition{2, 1}) return -1.0 / (d2 * d3);
        if (c == CyclePartition{3}) return 2.0 / (nn * d2 * d3);
    }
    if (m == 4) {
        double den = nn * nn * d2 * d3 * d4;
        if (c == CyclePartition{1, 1, 1, 1}) return (std::pow(nn, 4) - 8.0 * nn * nn + 6.0) / den;
        if (c == CyclePartition{2, 1, 1}) return -1.0 / (nn * d2 * d4);
        if (c == CyclePartition{2, 2}) return (nn * nn + 6.0) / den;
        if (c == CyclePartition{3, 1}) return (2.0 * nn * nn - 3.0) / den;
        if (c == CyclePartition{4}) return -5.0 / (nn * d2 * d3 * d4);
    }
    throw UnsupportedOrderError("weingarten_closed_form: no closed form stored for this class");
}

double gram_identity_residual(const WeingartenTable& table) {
    auto perms = all_permutations(table.order);
    std::vector<CyclePartition> classes;
    std::vector<std::vector<int>> reps;
    for (const auto& p : perms) {
        CyclePartition c = cycle_type_unchecked(p);
        if (std::find(classes.begin(), classes.end(), c) == classes.end()) {
            classes.push_back(c);
            reps.push_back(p);
        }
    }
    CyclePartition id_class(table.order, 1);
    double worst = 0.0;
    for (std::size_t r = 0; r < classes.size(); ++r) {
        double sum = 0.0;
        for (const auto& tau : perms) {
            auto st = compose_inv(reps[r], tau);
            int cycles = static_cast<int>(cycle_type_unchecked(st).size());
            sum += std::pow(static_cast<double>(table.n), cycles) *
                   table.values.at(cycle_type_unchecked(tau));
        }
        double target = (classes[r] == id_class) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(sum - target));
    }
    return worst;
}

std::vector<Contraction> enumerate_contractions(int k) {
    if (k < 1 || k > 3) {
        throw UnsupportedOrderError("enumerate_contractions: k must be in 1..3");
    }
    int m = 2 * k;
    auto perms = all_permutations(m);
    std::vector<Contraction> out;
    out.reserve(perms.size() * perms.size());
    for (const auto& pi : perms) {
        for (const auto& tau : perms) {
            Contraction c;
            for (int i = 0; i < m; ++i) {
                c.pi[i] = static_cast<std::uint8_t>(pi[i]);
                c.tau[i] = static_cast<std::uint8_t>(tau[i]);
            }
            c.wg_class = cycle_type_unchecked(compose_inv(pi, tau));
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

// E[prod_j V_{a_j b_j} prod_j V*_{alpha_j beta_j}] for k factors of each kind.
double weingarten_moment(const std::vector<std::pair<int, int>>& v,
                         const std::vector<std::pair<int, int>>& vstar, int n) {
    int k = static_cast<int>(v.size());
    WeingartenTable table = weingarten_table(k, n);
    auto perms = all_permutations(k);
    double total = 0.0;
    for (const auto& sigma : perms) {
        bool rows_ok = true;
        for (int j = 0; j < k && rows_ok; ++j) {
            rows_ok = (v[j].first == vstar[sigma[j]].first);
        }
        if (!rows_ok) continue;
        for (const auto& tau : perms) {
            bool cols_ok = true;
            for (int j = 0; j < k && cols_ok; ++j) {
                cols_ok = (v[j].second == vstar[tau[j]].second);
            }
            if (!cols_ok) continue;
            total += table.values.at(cycle_type_unchecked(compose_inv(sigma, tau)));
        }
    }
    return total;
}

}  // namespace

double haar_mc_validate(int k, int n, long samples, const RngStream& rng) {
    if (k < 1 || k > 2) throw UnsupportedOrderError("haar_mc_validate: k must be 1 or 2");
    if (n < 2) throw InvalidDimensionError("haar_mc_validate: n must be >= 2");
    if (samples < 2) throw InvalidParameterError("haar_mc_validate: samples must be >= 2");

    using Pairs = std::vector<std::pair<int, int>>;
    std::vector<std::pair<Pairs, Pairs>> panel;
    if (k == 1) {
        panel.push_back({Pairs{{0, 0}}, Pairs{{0, 0}}});
        panel.push_back({Pairs{{0, 1}}, Pairs{{0, 1}}});
        panel.push_back({Pairs{{1, 0}}, Pairs{{1, 0}}});
    } else {
        panel.push_back({Pairs{{0, 0}, {1, 1}}, Pairs{{0, 0}, {1, 1}}});  // 1/(n^2-1)
        panel.push_back({Pairs{{0, 0}, {0, 0}}, Pairs{{0, 0}, {0, 0}}});  // E|V00|^4
        panel.push_back({Pairs{{0, 0}, {0, 1}}, Pairs{{0, 0}, {0, 1}}});
        panel.push_back({Pairs{{0, 0}, {1, 1}}, Pairs{{0, 1}, {1, 0}}});  // Wg((2))
    }

    std::vector<ComplexAccumulator> acc(panel.size());
    RngStream stream = rng;
    for (long s = 0; s < samples; ++s) {
        CMatrix u = mc_haar_unitary(n, stream);
        for (std::size_t i = 0; i < panel.size(); ++i) {
            Complex val(1.0, 0.0);
            for (auto [a, b] : panel[i].first) val *= u(a, b);
            for (auto [a, b] : panel[i].second) val *= std::conj(u(a, b));
            acc[i].add(val);
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        double pred = weingarten_moment(panel[i].first, panel[i].second, n);
        worst = std::max(worst, std::abs(acc[i].mean_re - pred));
        worst = std::max(worst, std::abs(acc[i].mean_im));
    }
    return worst;
}

}  // namespace guechan
