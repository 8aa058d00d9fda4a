#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polylap/matrix.hpp"

namespace polylap {

/// Full eigendecomposition of a real symmetric matrix: ascending eigenvalues,
/// optionally the orthonormal eigenvector columns and per-pair residuals
/// ||M v - lambda v||.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::optional<Matrix> eigenvectors;       // column k = eigenvector of eigenvalues[k]
    std::optional<std::vector<double>> residuals;

    double max_residual() const;
};

/// Householder tridiagonalization followed by implicit-shift QL with Wilkinson
/// shifts. Deterministic for identical input; throws NumericalError after 50
/// sweeps on any off-diagonal element, naming a fingerprint of the matrix.
Spectrum eigen_sym(const Matrix& m, bool want_vectors);

/// Prefix means helper: sums lambda_1..lambda_k for k = 1..k_max, compensated.
std::vector<double> partial_sums(const Spectrum& s, int k_max);

/// Slack of the Rayleigh-Ritz estimate
///   gamma_{k+1} <g,g> <= <g,Lg> + sum_{j<=k} (gamma_{k+1}-gamma_j) |<g,f_j>|^2
/// (gamma_{n+1} = 0 when k = n). Nonnegative up to roundoff for symmetric
/// positive semidefinite input.
double rayleigh_ritz_check(const Matrix& m, std::span<const double> g, int k, const Spectrum& s);

}  // namespace polylap
