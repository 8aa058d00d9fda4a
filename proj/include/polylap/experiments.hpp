#pragma once

#include <optional>
#include <string>
#include <vector>

namespace polylap {

enum class ExhaustionShape { Box, Ball };

struct ExhaustionStep {
    int size = 0;          // box [0,size]^d or ball of radius size
    int omega_size = 0;
    double lam_l = 0.0;    // lambda_k of the order-l operator
    double lam1_pow_l = 0.0;  // (lambda_k of the order-1 operator)^l
};

/// Dirichlet eigenvalues along a nested domain family. Domain monotonicity
/// makes the lam_l column non-increasing; for k = 1 it tends to
/// lambda_1^l(Z^d) = 0 and the comparison column tracks it.
struct ExhaustionResult {
    int d = 1;
    int l = 1;
    int k = 1;
    std::vector<ExhaustionStep> steps;

    bool non_increasing(double tol = 1e-12) const;
};

/// sizes must be strictly increasing (nested domains).
ExhaustionResult run_exhaustion(ExhaustionShape shape, int d, int l, int k,
                                const std::vector<int>& sizes);

/// k-th positive root of cos(beta) cosh(beta) = 1, bracketed around (k+1/2)pi.
double clamped_beam_root(int k);

/// Continuum reference c_k = (k pi)^4 / beta_k^4 for the path-graph ratio
/// (lambda_k^1)^2 / lambda_k^2.
double clamped_beam_constant(int k);

struct RatioEntry {
    int n = 0;             // path [0, n], n+1 vertices
    double ratio = 0.0;    // (lambda_k^1)^2 / lambda_k^2
};

struct RatioSeries {
    int k = 1;
    double reference = 0.0;              // c_k
    std::vector<RatioEntry> entries;
    std::optional<double> richardson;    // extrapolated limit, geometric ladders only

    bool all_below_one() const;
};

/// Ratio (lambda_k^1)^2 / lambda_k^2 on the paths [0, n] for each n in n_list
/// (strictly increasing, n <= 2000), with the continuum reference constant.
RatioSeries run_ratio_series(int k, const std::vector<int>& n_list);

/// Richardson extrapolation from the last three entries of a geometric ladder;
/// nullopt when the ladder is not geometric or too short.
std::optional<double> richardson_limit(const std::vector<RatioEntry>& entries);

}  // namespace polylap
