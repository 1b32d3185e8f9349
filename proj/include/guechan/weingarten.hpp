#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "guechan/rng.hpp"

namespace guechan {

// Cycle lengths of a permutation, sorted descending. Labels a conjugacy
// class of S_m; the parts sum to the table order m.
using CyclePartition = std::vector<int>;

// Unitary-group Weingarten function for S_order over U(n), one value per
// conjugacy class.
struct WeingartenTable {
    int order = 0;  // number of boxes m (table over S_m)
    int n = 0;
    std::map<CyclePartition, double> values;
};

// Cycle type of a permutation given in one-line notation (perm[i] = image of
// i, 0-based). Throws InvalidInputError if not a bijection.
CyclePartition cycle_type(const std::vector<int>& perm);

// Wg over S_order at dimension n, via the class-collapsed Gram system
// M[sigma][tau] = n^{#cycles(sigma tau^-1)}. Exact at machine precision; no
// character tables. Requires n >= order (Gram invertibility; below that the
// downstream channel assembly handles the cancellations) and order <= 6.
WeingartenTable weingarten_table(int order, int n);

// Standard closed-form rational values for order <= 4, kept as an independent
// oracle for the Gram inversion.
double weingarten_closed_form(const CyclePartition& partition, int n);

// Max residual of the defining identity sum_tau n^{#cycles(sigma tau^-1)}
// Wg(tau) = [sigma == id] over one representative sigma per class.
double gram_identity_residual(const WeingartenTable& table);

// One term of the 2k-fold Haar average: a pair of pairings (pi, tau) in
// S_{2k} x S_{2k} weighted by Wg(class(pi tau^-1)).
struct Contraction {
    std::array<std::uint8_t, 6> pi{};
    std::array<std::uint8_t, 6> tau{};
    CyclePartition wg_class;
};

// All (2k)!^2 ordered pairs with their Weingarten class attached; k <= 3.
std::vector<Contraction> enumerate_contractions(int k);

// Sample Haar unitaries and compare a panel of k-fold monomial moments
// E[V... V*...] against the Weingarten prediction; returns the maximum
// absolute deviation over the panel. k <= 2.
double haar_mc_validate(int k, int n, long samples, const RngStream& rng);

}  // namespace guechan
