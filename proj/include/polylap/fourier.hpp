#pragma once

#include <complex>
#include <span>
#include <vector>

#include "polylap/lattice.hpp"
#include "polylap/operator.hpp"

namespace polylap {

/// Uniform tensor grid on [-pi, pi)^d with spacing 2pi/N. Quadrature with
/// weight (2pi/N)^d per node integrates trigonometric polynomials of per-axis
/// degree < N exactly, which is what makes the checks below exact up to
/// rounding.
struct FourierGrid {
    int d = 1;
    int points_per_dim = 1;

    double node_coord(int j) const;                    // j-th coordinate value
    long long node_count() const;

    /// Smallest admissible N for a domain of coordinate extent `extent` hit by
    /// an order-l symbol: 2 (extent + l) + 1.
    static int required_size(int extent, int l);
    bool certificate_ok(int extent, int l) const { return points_per_dim >= required_size(extent, l); }
};

/// Largest single-axis coordinate spread of the domain.
int coordinate_extent(const LatticeDomain& dom);

/// Grid sized by the spec rule for the given domain and order.
FourierGrid make_grid(const LatticeDomain& dom, int l);

/// Fourier symbol of -Delta on Z^d.
double phi(std::span<const double> z);

/// <f, h_z>_Omega = sum_x f(x) e^{-i<x,z>}.
std::complex<double> hz_inner(const LatticeDomain& dom, std::span<const double> f,
                              std::span<const double> z);

struct FourierCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;
    int grid_n = 0;
    bool certificate_ok = false;
};

/// <f,f>_Omega against the quadrature of (2pi)^{-d} integral |<f,h_z>|^2 dz.
FourierCheck plancherel_check(const LatticeDomain& dom, std::span<const double> f,
                              const FourierGrid& grid);

/// <f, (-1)^l Delta_Omega^{l,D} f>_Omega against the quadrature of
/// (2pi)^{-d} integral Phi^l |<f,h_z>|^2 dz.
FourierCheck polylaplace_fourier_check(const LatticeDomain& dom, std::span<const double> f, int l,
                                       const FourierGrid& grid);

/// Max over grid nodes of |<h_z, (-1)^l Delta^{l,D} (h_z|_Omega)>| - Phi(z)^l |Omega| - |d^l Omega|;
/// nonpositive up to rounding.
double hz_operator_bound_check(const LatticeDomain& dom, int l, const FourierGrid& grid);

/// One row of the no-l2-eigenfunction illustration: the distance from lam to
/// the Dirichlet order-l spectrum of the box [0, size-1]^d, computed as the
/// smallest singular value of M - lam I via an eigensolve of its square.
struct ResidualRow {
    int size = 0;
    int omega_size = 0;
    double residual = 0.0;
};

struct ResidualTable {
    int d = 1;
    int l = 1;
    double lam = 0.0;
    std::vector<ResidualRow> rows;
};

/// Diagnostic table (no pass/fail): the residual stays strictly positive on
/// every finite window, while no normalized near-eigenfunction stabilizes.
ResidualTable no_l2_eigenfunction_demo(int d, int l, double lam, const std::vector<int>& box_sizes);

}  // namespace polylap
