#include "polylap/operator.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "polylap/common.hpp"
#include "polylap/parallel.hpp"

namespace polylap {

namespace {

constexpr double kSymmetryTol = 1e-13;

// Applies (-Delta) l times to the j-th omega indicator over the padded set and
// stores the restriction to omega into column j of m.
void stencil_column(const PaddedDomain& pd, int l, int j, Matrix& m,
                    std::vector<double>& work_a, std::vector<double>& work_b) {
    work_a.assign(static_cast<std::size_t>(pd.n_total), 0.0);
    work_a[static_cast<std::size_t>(j)] = 1.0;
    for (int step = 0; step < l; ++step) {
        for (int x = 0; x < pd.n_total; ++x) {
            double s = pd.ambient_degree[static_cast<std::size_t>(x)] * work_a[static_cast<std::size_t>(x)];
            for (int y : pd.adj[static_cast<std::size_t>(x)]) s -= work_a[static_cast<std::size_t>(y)];
            work_b[static_cast<std::size_t>(x)] = s;
        }
        work_a.swap(work_b);
    }
    for (int i = 0; i < pd.n_omega; ++i) m.at(i, j) = work_a[static_cast<std::size_t>(i)];
}

PolyLaplaceOperator assemble_padded(const PaddedDomain& pd, int l, int dim) {
    if (l < 1) throw std::invalid_argument("operator order must be >= 1");

    PolyLaplaceOperator op;
    op.order = l;
    op.n = pd.n_omega;
    op.dim = dim;
    op.matrix = Matrix(op.n);

    parallel_chunks(op.n, [&](int begin, int end) {
        std::vector<double> a(static_cast<std::size_t>(pd.n_total)), b(a.size());
        for (int j = begin; j < end; ++j) stencil_column(pd, l, j, op.matrix, a, b);
    });

    const double defect = op.matrix.symmetry_defect();
    const double scale = op.matrix.max_abs();
    if (defect > kSymmetryTol * scale)
        throw NumericalError("assembled operator not symmetric: defect " + std::to_string(defect));
    op.matrix.symmetrize();
    return op;
}

}  // namespace

PolyLaplaceOperator assemble(const LatticeDomain& dom, int l) {
    return assemble_padded(pad_domain(dom, l), l, dom.dim());
}

PolyLaplaceOperator assemble(const AmbientGraph& g, int l) {
    return assemble_padded(pad_domain(g, l), l, 0);
}

PolyLaplaceOperator assemble(const DomainRef& dom, int l) {
    return std::visit([l](const auto* d) { return assemble(*d, l); }, dom);
}

std::vector<double> apply_laplacian(const AmbientGraph& g, std::span<const double> f) {
    if (static_cast<int>(f.size()) != g.size())
        throw std::invalid_argument("function size does not match vertex count");
    std::vector<double> out(f.size());
    for (int x = 0; x < g.size(); ++x) {
        double s = -static_cast<double>(g.degree(x)) * f[static_cast<std::size_t>(x)];
        for (int y : g.neighbors(x)) s += f[static_cast<std::size_t>(y)];
        out[static_cast<std::size_t>(x)] = s;
    }
    return out;
}

LatticeFn apply_laplacian(int d, const LatticeFn& f) {
    LatticeFn out;
    auto value = [&](const Vertex& v) {
        auto it = f.find(v);
        return it == f.end() ? 0.0 : it->second;
    };
    auto touch = [&](const Vertex& v) {
        if (out.count(v)) return;
        double s = -2.0 * d * value(v);
        Vertex nbr = v;
        for (int axis = 0; axis < d; ++axis) {
            for (int step : {-1, +1}) {
                nbr[static_cast<std::size_t>(axis)] += step;
                s += value(nbr);
                nbr[static_cast<std::size_t>(axis)] -= step;
            }
        }
        out[v] = s;
    };
    for (const auto& [v, fv] : f) {
        touch(v);
        Vertex nbr = v;
        for (int axis = 0; axis < d; ++axis)
            for (int step : {-1, +1}) {
                nbr[static_cast<std::size_t>(axis)] += step;
                touch(nbr);
                nbr[static_cast<std::size_t>(axis)] -= step;
            }
    }
    return out;
}

std::vector<double> zero_extend(const PaddedDomain& pd, std::span<const double> f_omega) {
    if (static_cast<int>(f_omega.size()) != pd.n_omega)
        throw std::invalid_argument("function size does not match |Omega|");
    std::vector<double> out(static_cast<std::size_t>(pd.n_total), 0.0);
    for (int i = 0; i < pd.n_omega; ++i) out[static_cast<std::size_t>(i)] = f_omega[static_cast<std::size_t>(i)];
    return out;
}

std::vector<double> apply_neg_laplacian(const PaddedDomain& pd, std::span<const double> f) {
    if (static_cast<int>(f.size()) != pd.n_total)
        throw std::invalid_argument("function size does not match padded domain");
    std::vector<double> out(f.size());
    for (int x = 0; x < pd.n_total; ++x) {
        double s = pd.ambient_degree[static_cast<std::size_t>(x)] * f[static_cast<std::size_t>(x)];
        for (int y : pd.adj[static_cast<std::size_t>(x)]) s -= f[static_cast<std::size_t>(y)];
        out[static_cast<std::size_t>(x)] = s;
    }
    return out;
}

namespace {

double coeff_axy_regular(long long deg, long long pm[], int l) {
    // sum_m C(l,m) (-1)^m deg^{l-m} p_m, assembled in integer arithmetic.
    double total = 0.0;
    double binom = 1.0;
    for (int m = 0; m <= l; ++m) {
        double degpow = 1.0;
        for (int t = 0; t < l - m; ++t) degpow *= static_cast<double>(deg);
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        total += binom * sign * degpow * static_cast<double>(pm[m]);
        binom = binom * (l - m) / (m + 1);
    }
    return total;
}

}  // namespace

double coeff_axy(int d, const Vertex& x, const Vertex& y, int l) {
    if (l < 1) throw std::invalid_argument("order must be >= 1");
    if (graph_distance(d, x, y) > l) throw std::invalid_argument("coeff_axy requires d(x,y) <= l");
    std::vector<long long> pm(static_cast<std::size_t>(l) + 1);
    for (int m = 0; m <= l; ++m) pm[static_cast<std::size_t>(m)] = count_paths(d, x, y, m);
    return coeff_axy_regular(2LL * d, pm.data(), l);
}

double coeff_axy(const AmbientGraph& g, int x, int y, int l) {
    if (l < 1) throw std::invalid_argument("order must be >= 1");
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != g.max_degree())
            throw std::invalid_argument("coeff_axy requires a regular ambient graph");
    const auto dist = graph_distance(g, x, y);
    if (!dist || *dist > l) throw std::invalid_argument("coeff_axy requires d(x,y) <= l");
    std::vector<long long> pm(static_cast<std::size_t>(l) + 1);
    for (int m = 0; m <= l; ++m) pm[static_cast<std::size_t>(m)] = count_paths(g, x, y, m);
    return coeff_axy_regular(g.max_degree(), pm.data(), l);
}

namespace {

BoundaryMeasure boundary_measure_padded(const PaddedDomain& pd, int l, int max_deg) {
    if (l < 1) throw std::invalid_argument("order must be >= 1");

    // exact: apply (-Delta)^l to every omega indicator and accumulate |values|
    // at boundary-layer vertices -- the column view of sum_x sum_y |a^l_xy|.
    std::vector<KahanSum> row_abs(static_cast<std::size_t>(pd.n_total - pd.n_omega));
    std::vector<double> a(static_cast<std::size_t>(pd.n_total)), b(a.size());
    for (int j = 0; j < pd.n_omega; ++j) {
        a.assign(a.size(), 0.0);
        a[static_cast<std::size_t>(j)] = 1.0;
        for (int step = 0; step < l; ++step) {
            for (int x = 0; x < pd.n_total; ++x) {
                double s = pd.ambient_degree[static_cast<std::size_t>(x)] * a[static_cast<std::size_t>(x)];
                for (int y : pd.adj[static_cast<std::size_t>(x)]) s -= a[static_cast<std::size_t>(y)];
                b[static_cast<std::size_t>(x)] = s;
            }
            a.swap(b);
        }
        for (int x = pd.n_omega; x < pd.n_total; ++x)
            row_abs[static_cast<std::size_t>(x - pd.n_omega)].add(std::abs(a[static_cast<std::size_t>(x)]));
    }

    BoundaryMeasure bm;
    bm.l = l;
    KahanSum exact;
    for (const auto& r : row_abs) exact.add(r.value());
    bm.exact = exact.value();

    double factor = 1.0;
    for (int t = 0; t < l; ++t) factor *= 2.0 * max_deg;
    bm.crude = factor * static_cast<double>(pd.n_total - pd.n_omega);
    return bm;
}

}  // namespace

BoundaryMeasure boundary_measure(const LatticeDomain& dom, int l) {
    return boundary_measure_padded(pad_domain(dom, l), l, 2 * dom.dim());
}

BoundaryMeasure boundary_measure(const AmbientGraph& g, int l) {
    return boundary_measure_padded(pad_domain(g, l), l, g.max_degree());
}

BoundaryMeasure boundary_measure(const DomainRef& dom, int l) {
    return std::visit([l](const auto* d) { return boundary_measure(*d, l); }, dom);
}

double quadratic_form(const PolyLaplaceOperator& op, std::span<const double> f) {
    if (static_cast<int>(f.size()) != op.n)
        throw std::invalid_argument("function size does not match operator");
    KahanSum total;
    for (int i = 0; i < op.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < op.n; ++j) s += op.matrix.at(i, j) * f[static_cast<std::size_t>(j)];
        total.add(s * f[static_cast<std::size_t>(i)]);
    }
    return total.value();
}

double quadratic_form(const PolyLaplaceOperator& op, std::span<const std::complex<double>> f) {
    if (static_cast<int>(f.size()) != op.n)
        throw std::invalid_argument("function size does not match operator");
    std::complex<double> total = 0.0;
    double f_norm2 = 0.0;
    for (int i = 0; i < op.n; ++i) {
        std::complex<double> s = 0.0;
        for (int j = 0; j < op.n; ++j) s += op.matrix.at(i, j) * f[static_cast<std::size_t>(j)];
        total += s * std::conj(f[static_cast<std::size_t>(i)]);
        f_norm2 += std::norm(f[static_cast<std::size_t>(i)]);
    }
    const double scale = std::abs(total.real()) + op.matrix.max_abs() * f_norm2;
    if (std::abs(total.imag()) > 1e-12 * scale)
        throw NumericalError("Hermitian form has a non-negligible imaginary part");
    return total.real();
}

std::string dump_operator(const PolyLaplaceOperator& op) {
    std::vector<std::tuple<int, int, double>> entries;
    for (int i = 0; i < op.n; ++i)
        for (int j = 0; j <= i; ++j)
            if (op.matrix.at(i, j) != 0.0) entries.emplace_back(i, j, op.matrix.at(i, j));

    std::string out = std::to_string(op.n) + " " + std::to_string(op.n) + " " +
                      std::to_string(entries.size()) + "\n";
    char buf[64];
    for (const auto& [i, j, v] : entries) {
        std::snprintf(buf, sizeof buf, "%d %d %.12e\n", i + 1, j + 1, v);
        out += buf;
    }
    return out;
}

}  // namespace polylap
