#pragma once

#include <optional>
#include <vector>

#include "polylap/lattice.hpp"
#include "polylap/operator.hpp"

namespace polylap {

/// Volume of the unit ball in R^d, via V_d = V_{d-2} * 2 pi / d.
double unit_ball_volume(int d);

/// Binomial coefficient by Pascal recurrence; exact for l <= 60.
double binomial(int n, int k);

/// Largest k for which each estimate is proven, as a real cap on k/|Omega|.
double upper_mean_cap(int d);    // min{1, V_d / 2^d}
double upper_next_cap(int d);    // min{1, V_d / 2^{d+1}}
double lower_mean_cap(int d);    // min{1, (sqrt6 / 2pi)^d V_d}

/// Averaged upper estimate
///   (1/k) sum_j lambda_j^l <= (2pi)^{2l} d/(d+2l) (k/(V_d|Omega|))^{2l/d} + |d^l Omega|/|Omega|,
/// valid for k <= upper_mean_cap(d) |Omega|; nullopt outside that range.
std::optional<double> upper_bound_mean(int d, int l, int k, int omega_size, double boundary_exact);

/// Single-eigenvalue upper estimate
///   lambda_{k+1}^l <= (2pi)^{2l} d 2^{(d+2l)/d}/(d+2l) (k/(V_d|Omega|))^{2l/d} + 2|d^l Omega|/|Omega|,
/// valid for k <= upper_next_cap(d) |Omega|.
std::optional<double> upper_bound_next(int d, int l, int k, int omega_size, double boundary_exact);

/// Averaged lower estimate
///   (1/k) sum_j lambda_j^l >= sum_m C(l,m)(-1/12)^m (2pi)^{2(l+m)} d/(d+2(l+m)) (k/(V_d|Omega|))^{2(l+m)/d},
/// valid (and positive) for k <= lower_mean_cap(d) |Omega|.
std::optional<double> lower_bound_mean(int d, int l, int k, int omega_size);

/// |E(Omega, delta Omega)|; equals the exact |partial^1 Omega|.
double refined_boundary_l1(const DomainRef& dom);

/// z-free form of the refined |partial^2 Omega| estimate:
///   4 d E1 + (E1 + 2 E2 + E3) N + E3 E1
/// with N = max_{x in delta Omega} 2 |{y in Omega : y ~ x}|, a uniform bound
/// on the normal-derivative factor. The leading 4d becomes 2 maxdeg on
/// ambient graphs.
double refined_boundary_l2(const DomainRef& dom);

struct BoundRow {
    int k = 0;
    double mean_eigs = 0.0;                  // (1/k) sum_{j<=k} lambda_j
    std::optional<double> upper_mean;
    double next_eig = 0.0;                   // lambda_{k+1}, 0 when k = |Omega|
    std::optional<double> upper_next;
    std::optional<double> lower_mean;
    std::optional<bool> ok_upper_mean;       // verdicts present iff the bound is
    std::optional<bool> ok_upper_next;
    std::optional<bool> ok_lower_mean;
};

struct BoundsReport {
    int d = 0;
    int l = 1;
    int omega_size = 0;
    BoundaryMeasure boundary;
    std::vector<BoundRow> rows;

    bool all_pass() const;
};

/// Assembles the order-l operator, solves the spectrum, and evaluates all
/// three estimates for k = 1..min(k_max, |Omega|). Lattice domains only.
BoundsReport verify_bounds(const LatticeDomain& dom, int l, int k_max);

struct OrderComparisonRow {
    int k = 0;
    double lam_l_sq = 0.0;
    double lam_2l = 0.0;
    double gap = 0.0;      // lam_2l - lam_l_sq
};

struct OrderComparison {
    int l = 1;
    int omega_size = 0;
    std::vector<OrderComparisonRow> rows;

    /// Spectra comparison scale for row k: max(lam_2l, lam_l_sq).
    static double row_scale(const OrderComparisonRow& r);
    bool all_nonnegative(double tol_factor = 1e-9) const;
};

/// (lambda_k^l)^2 vs lambda_k^{2l} per k = 1..min(k_max, |Omega|).
OrderComparison compare_orders(const DomainRef& dom, int l, int k_max);

}  // namespace polylap
