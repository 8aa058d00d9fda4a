#include "polylap/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "polylap/common.hpp"
#include "polylap/eigen.hpp"
#include "polylap/parallel.hpp"

namespace polylap {

namespace {

constexpr double kPi = std::numbers::pi;

void node_from_flat(const FourierGrid& grid, long long flat, std::vector<double>& z) {
    for (int a = grid.d - 1; a >= 0; --a) {
        z[static_cast<std::size_t>(a)] = grid.node_coord(static_cast<int>(flat % grid.points_per_dim));
        flat /= grid.points_per_dim;
    }
}

// Evaluates fn(z) at every grid node into a per-node slot vector (parallel,
// order-independent by construction), to be reduced serially afterwards so
// results stay byte-identical for any worker count.
template <typename Fn>
std::vector<double> map_nodes(const FourierGrid& grid, Fn&& fn) {
    const long long count = grid.node_count();
    std::vector<double> values(static_cast<std::size_t>(count));
    parallel_chunks(static_cast<int>(count), [&](int begin, int end) {
        std::vector<double> z(static_cast<std::size_t>(grid.d));
        for (int i = begin; i < end; ++i) {
            node_from_flat(grid, i, z);
            values[static_cast<std::size_t>(i)] = fn(std::span<const double>(z));
        }
    });
    return values;
}

double relative_error(double lhs, double rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / scale;
}

}  // namespace

double FourierGrid::node_coord(int j) const { return -kPi + 2.0 * kPi * j / points_per_dim; }

long long FourierGrid::node_count() const {
    long long c = 1;
    for (int a = 0; a < d; ++a) c *= points_per_dim;
    return c;
}

int FourierGrid::required_size(int extent, int l) { return 2 * (extent + l) + 1; }

int coordinate_extent(const LatticeDomain& dom) {
    int extent = 0;
    for (int a = 0; a < dom.dim(); ++a) {
        int lo = dom.vertex(0)[static_cast<std::size_t>(a)];
        int hi = lo;
        for (const Vertex& v : dom.vertices()) {
            lo = std::min(lo, v[static_cast<std::size_t>(a)]);
            hi = std::max(hi, v[static_cast<std::size_t>(a)]);
        }
        extent = std::max(extent, hi - lo);
    }
    return extent;
}

FourierGrid make_grid(const LatticeDomain& dom, int l) {
    return FourierGrid{dom.dim(), FourierGrid::required_size(coordinate_extent(dom), l)};
}

double phi(std::span<const double> z) {
    double s = 0.0;
    for (double zi : z) s += 2.0 - 2.0 * std::cos(zi);
    return s;
}

std::complex<double> hz_inner(const LatticeDomain& dom, std::span<const double> f,
                              std::span<const double> z) {
    if (static_cast<int>(f.size()) != dom.size())
        throw std::invalid_argument("function size does not match |Omega|");
    std::complex<double> total = 0.0;
    for (int i = 0; i < dom.size(); ++i) {
        const Vertex& x = dom.vertex(i);
        double xz = 0.0;
        for (int a = 0; a < dom.dim(); ++a)
            xz += x[static_cast<std::size_t>(a)] * z[static_cast<std::size_t>(a)];
        total += f[static_cast<std::size_t>(i)] * std::complex<double>(std::cos(xz), -std::sin(xz));
    }
    return total;
}

FourierCheck plancherel_check(const LatticeDomain& dom, std::span<const double> f,
                              const FourierGrid& grid) {
    const int extent = coordinate_extent(dom);
    if (!grid.certificate_ok(extent, 0))
        throw GridCertificateError(grid.points_per_dim, FourierGrid::required_size(extent, 0));

    KahanSum lhs;
    for (double v : f) lhs.add(v * v);

    const std::vector<double> samples = map_nodes(grid, [&](std::span<const double> z) {
        return std::norm(hz_inner(dom, f, z));
    });
    KahanSum quad;
    for (double v : samples) quad.add(v);
    const double weight = 1.0 / static_cast<double>(grid.node_count());  // (2pi/N)^d / (2pi)^d

    FourierCheck out;
    out.lhs = lhs.value();
    out.rhs = quad.value() * weight;
    out.rel_err = relative_error(out.lhs, out.rhs);
    out.grid_n = grid.points_per_dim;
    out.certificate_ok = true;
    return out;
}

FourierCheck polylaplace_fourier_check(const LatticeDomain& dom, std::span<const double> f, int l,
                                       const FourierGrid& grid) {
    const int extent = coordinate_extent(dom);
    if (!grid.certificate_ok(extent, l))
        throw GridCertificateError(grid.points_per_dim, FourierGrid::required_size(extent, l));

    const PolyLaplaceOperator op = assemble(dom, l);

    const std::vector<double> samples = map_nodes(grid, [&](std::span<const double> z) {
        return std::pow(phi(z), l) * std::norm(hz_inner(dom, f, z));
    });
    KahanSum quad;
    for (double v : samples) quad.add(v);
    const double weight = 1.0 / static_cast<double>(grid.node_count());

    FourierCheck out;
    out.lhs = quadratic_form(op, f);
    out.rhs = quad.value() * weight;
    out.rel_err = relative_error(out.lhs, out.rhs);
    out.grid_n = grid.points_per_dim;
    out.certificate_ok = true;
    return out;
}

double hz_operator_bound_check(const LatticeDomain& dom, int l, const FourierGrid& grid) {
    const PolyLaplaceOperator op = assemble(dom, l);
    const double boundary = boundary_measure(dom, l).exact;
    const int n = dom.size();

    const std::vector<double> slacks = map_nodes(grid, [&](std::span<const double> z) {
        std::vector<std::complex<double>> h(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const Vertex& x = dom.vertex(i);
            double xz = 0.0;
            for (int a = 0; a < dom.dim(); ++a)
                xz += x[static_cast<std::size_t>(a)] * z[static_cast<std::size_t>(a)];
            h[static_cast<std::size_t>(i)] = {std::cos(xz), std::sin(xz)};
        }
        const double form = quadratic_form(op, std::span<const std::complex<double>>(h));
        return std::abs(form) - std::pow(phi(z), l) * n - boundary;
    });
    double worst = -std::numeric_limits<double>::infinity();
    for (double s : slacks) worst = std::max(worst, s);
    return worst;
}

ResidualTable no_l2_eigenfunction_demo(int d, int l, double lam, const std::vector<int>& box_sizes) {
    if (lam <= 0.0) throw std::invalid_argument("lam must be positive");

    ResidualTable table;
    table.d = d;
    table.l = l;
    table.lam = lam;
    for (int size : box_sizes) {
        if (size < 1) throw std::invalid_argument("box size must be >= 1");
        const LatticeDomain box =
            make_box(d, Vertex(static_cast<std::size_t>(d), 0), Vertex(static_cast<std::size_t>(d), size - 1));
        const PolyLaplaceOperator op = assemble(box, l);

        Matrix shifted = op.matrix;
        for (int i = 0; i < shifted.n(); ++i) shifted.at(i, i) -= lam;
        const Matrix squared = shifted * shifted;
        const Spectrum spec = eigen_sym(squared, false);
        const double smallest = std::max(spec.eigenvalues.front(), 0.0);

        ResidualRow row;
        row.size = size;
        row.omega_size = box.size();
        row.residual = std::sqrt(smallest);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace polylap
