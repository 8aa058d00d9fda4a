#pragma once

#include <complex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polylap/lattice.hpp"
#include "polylap/matrix.hpp"

namespace polylap {

/// The Dirichlet poly-Laplace operator of a domain, stored with sign (-1)^l so
/// that the matrix is symmetric positive definite. Row/column order is the
/// domain index order.
struct PolyLaplaceOperator {
    int order = 1;
    int n = 0;
    int dim = 0;        // lattice dimension, 0 for ambient-graph domains
    Matrix matrix;
};

/// |partial^l Omega|: `exact` sums |a^l_xy| over boundary-layer rows (computed
/// from operator columns, so it is valid on irregular ambient graphs too);
/// `crude` is the degree bound (2 maxdeg)^l (|delta_1|+...+|delta_l|), which is
/// 4^l d^l (...) on Z^d.
struct BoundaryMeasure {
    int l = 1;
    double exact = 0.0;
    double crude = 0.0;
};

/// Assemble (-1)^l Delta_Omega^{l,D} by applying the ambient -Delta l times to
/// each vertex indicator, zero-extended over l boundary layers. Throws
/// NumericalError if the symmetry defect exceeds 1e-13 * max entry.
PolyLaplaceOperator assemble(const LatticeDomain& dom, int l);
PolyLaplaceOperator assemble(const AmbientGraph& g, int l);
PolyLaplaceOperator assemble(const DomainRef& dom, int l);

/// Pointwise graph Laplacian Delta f(x) = sum_{y~x} (f(y) - f(x)) on a finite
/// graph; f is given on all vertices.
std::vector<double> apply_laplacian(const AmbientGraph& g, std::span<const double> f);

/// Same on Z^d for a finitely supported function; values outside the support
/// are 0. The result is supported on the support plus its neighbors.
using LatticeFn = std::unordered_map<Vertex, double, VertexHash>;
LatticeFn apply_laplacian(int d, const LatticeFn& f);

/// Zero extension of f in C(Omega) onto a padded domain.
std::vector<double> zero_extend(const PaddedDomain& pd, std::span<const double> f_omega);

/// (-Delta) f on a padded domain, using ambient degrees. Exact as long as the
/// support of f has not yet reached the outermost padding layer.
std::vector<double> apply_neg_laplacian(const PaddedDomain& pd, std::span<const double> f);

/// Coefficient a^l_xy = sum_m C(l,m) (-1)^m deg(y)^{l-m} p_m(x,y) of (-Delta)^l.
/// The binomial expansion requires D and A to commute, so only regular ambient
/// graphs are accepted. Lattice flavour: Z^d, degree 2d.
double coeff_axy(int d, const Vertex& x, const Vertex& y, int l);
double coeff_axy(const AmbientGraph& g, int x, int y, int l);

BoundaryMeasure boundary_measure(const LatticeDomain& dom, int l);
BoundaryMeasure boundary_measure(const AmbientGraph& g, int l);
BoundaryMeasure boundary_measure(const DomainRef& dom, int l);

/// <M f, f> with conjugation on the second slot; the imaginary part vanishes
/// for the real symmetric M and is discarded.
double quadratic_form(const PolyLaplaceOperator& op, std::span<const double> f);
double quadratic_form(const PolyLaplaceOperator& op, std::span<const std::complex<double>> f);

/// Plain-text dump: "n n nnz" header then 1-based (i, j, value) triplets of
/// the lower triangle, for cross-checking against external tools.
std::string dump_operator(const PolyLaplaceOperator& op);

}  // namespace polylap
