#include "polylap/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polylap/common.hpp"
#include "polylap/eigen.hpp"

namespace polylap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Floating-point slop on the integer gate k <= cap * |Omega|.
bool k_in_range(int k, double cap, int omega_size) {
    return k >= 1 && static_cast<double>(k) <= cap * static_cast<double>(omega_size) + 1e-12;
}

}  // namespace

double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    double v_even = 1.0;  // V_0
    double v_odd = 2.0;   // V_1
    int n_even = 0, n_odd = 1;
    while (n_even + 2 <= d) {
        n_even += 2;
        v_even *= kTwoPi / n_even;
    }
    while (n_odd + 2 <= d) {
        n_odd += 2;
        v_odd *= kTwoPi / n_odd;
    }
    return (d % 2 == 0) ? v_even : v_odd;
}

double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial out of range");
    if (n > 60) throw std::invalid_argument("binomial limited to n <= 60");
    unsigned long long row[61] = {1ULL};
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return static_cast<double>(row[k]);
}

double upper_mean_cap(int d) { return std::min(1.0, unit_ball_volume(d) / std::pow(2.0, d)); }

double upper_next_cap(int d) { return std::min(1.0, unit_ball_volume(d) / std::pow(2.0, d + 1)); }

double lower_mean_cap(int d) {
    return std::min(1.0, std::pow(std::sqrt(6.0) / kTwoPi, d) * unit_ball_volume(d));
}

std::optional<double> upper_bound_mean(int d, int l, int k, int omega_size, double boundary_exact) {
    if (!k_in_range(k, upper_mean_cap(d), omega_size)) return std::nullopt;
    const double vd = unit_ball_volume(d);
    const double weyl = std::pow(kTwoPi, 2 * l) * d / (d + 2.0 * l) *
                        std::pow(static_cast<double>(k) / (vd * omega_size), 2.0 * l / d);
    return weyl + boundary_exact / omega_size;
}

std::optional<double> upper_bound_next(int d, int l, int k, int omega_size, double boundary_exact) {
    if (!k_in_range(k, upper_next_cap(d), omega_size)) return std::nullopt;
    const double vd = unit_ball_volume(d);
    const double weyl = std::pow(kTwoPi, 2 * l) * d * std::pow(2.0, (d + 2.0 * l) / d) / (d + 2.0 * l) *
                        std::pow(static_cast<double>(k) / (vd * omega_size), 2.0 * l / d);
    return weyl + 2.0 * boundary_exact / omega_size;
}

std::optional<double> lower_bound_mean(int d, int l, int k, int omega_size) {
    if (!k_in_range(k, lower_mean_cap(d), omega_size)) return std::nullopt;
    const double vd = unit_ball_volume(d);
    KahanSum acc;
    for (int m = 0; m <= l; ++m) {
        const double sign_pow = std::pow(-1.0 / 12.0, m);
        const double term = binomial(l, m) * sign_pow * std::pow(kTwoPi, 2.0 * (l + m)) * d /
                            (d + 2.0 * (l + m)) *
                            std::pow(static_cast<double>(k) / (vd * omega_size), 2.0 * (l + m) / d);
        acc.add(term);
    }
    const double value = acc.value();
    if (!(value > 0.0))
        throw NumericalError("lower bound not positive inside its validity range");
    return value;
}

double refined_boundary_l1(const DomainRef& dom) {
    return static_cast<double>(edge_counts(dom).e1);
}

double refined_boundary_l2(const DomainRef& dom) {
    const PaddedDomain pd = pad_domain(dom, 2);
    EdgeCounts ec;
    int max_deg_in = 0;
    for (int u = 0; u < pd.n_total; ++u) {
        const int lu = pd.layer[static_cast<std::size_t>(u)];
        int deg_in = 0;
        for (int v : pd.adj[static_cast<std::size_t>(u)]) {
            const int lv = pd.layer[static_cast<std::size_t>(v)];
            if (lu == 1 && lv == 0) ++deg_in;
            if (v <= u) continue;
            const int a = std::min(lu, lv), b = std::max(lu, lv);
            if (a == 0 && b == 1) ++ec.e1;
            else if (a == 1 && b == 1) ++ec.e2;
            else if (a == 1 && b == 2) ++ec.e3;
        }
        if (lu == 1) max_deg_in = std::max(max_deg_in, deg_in);
    }
    const double lead = 2.0 * max_ambient_degree(dom);  // 4d on Z^d
    const double normal_factor = 2.0 * max_deg_in;
    return lead * static_cast<double>(ec.e1) +
           static_cast<double>(ec.e1 + 2 * ec.e2 + ec.e3) * normal_factor +
           static_cast<double>(ec.e3) * static_cast<double>(ec.e1);
}

bool BoundsReport::all_pass() const {
    for (const auto& r : rows) {
        if (r.ok_upper_mean && !*r.ok_upper_mean) return false;
        if (r.ok_upper_next && !*r.ok_upper_next) return false;
        if (r.ok_lower_mean && !*r.ok_lower_mean) return false;
    }
    return true;
}

BoundsReport verify_bounds(const LatticeDomain& dom, int l, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");

    BoundsReport rep;
    rep.d = dom.dim();
    rep.l = l;
    rep.omega_size = dom.size();
    rep.boundary = boundary_measure(dom, l);

    const PolyLaplaceOperator op = assemble(dom, l);
    const Spectrum spec = eigen_sym(op.matrix, false);

    const int rows = std::min(k_max, rep.omega_size);
    const std::vector<double> sums = partial_sums(spec, rows);

    // Verdicts tolerate a relative slack of 1e-9 on the bound side.
    const auto leq = [](double value, double bound) { return value <= bound + 1e-9 * std::abs(bound); };

    for (int k = 1; k <= rows; ++k) {
        BoundRow row;
        row.k = k;
        row.mean_eigs = sums[static_cast<std::size_t>(k - 1)] / k;
        row.next_eig = (k < rep.omega_size) ? spec.eigenvalues[static_cast<std::size_t>(k)] : 0.0;
        row.upper_mean = upper_bound_mean(rep.d, l, k, rep.omega_size, rep.boundary.exact);
        row.upper_next = upper_bound_next(rep.d, l, k, rep.omega_size, rep.boundary.exact);
        row.lower_mean = lower_bound_mean(rep.d, l, k, rep.omega_size);
        if (row.upper_mean) row.ok_upper_mean = leq(row.mean_eigs, *row.upper_mean);
        if (row.upper_next) row.ok_upper_next = leq(row.next_eig, *row.upper_next);
        if (row.lower_mean) row.ok_lower_mean = leq(*row.lower_mean, row.mean_eigs);
        rep.rows.push_back(row);
    }
    return rep;
}

double OrderComparison::row_scale(const OrderComparisonRow& r) {
    return std::max(r.lam_2l, r.lam_l_sq);
}

bool OrderComparison::all_nonnegative(double tol_factor) const {
    for (const auto& r : rows)
        if (r.gap < -tol_factor * row_scale(r)) return false;
    return true;
}

OrderComparison compare_orders(const DomainRef& dom, int l, int k_max) {
    if (l < 1) throw std::invalid_argument("order must be >= 1");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");

    const PolyLaplaceOperator op_l = assemble(dom, l);
    const PolyLaplaceOperator op_2l = assemble(dom, 2 * l);
    const Spectrum spec_l = eigen_sym(op_l.matrix, false);
    const Spectrum spec_2l = eigen_sym(op_2l.matrix, false);

    OrderComparison cmp;
    cmp.l = l;
    cmp.omega_size = domain_size(dom);
    const int rows = std::min(k_max, cmp.omega_size);
    for (int k = 1; k <= rows; ++k) {
        OrderComparisonRow row;
        row.k = k;
        const double lam_l = spec_l.eigenvalues[static_cast<std::size_t>(k - 1)];
        row.lam_l_sq = lam_l * lam_l;
        row.lam_2l = spec_2l.eigenvalues[static_cast<std::size_t>(k - 1)];
        row.gap = row.lam_2l - row.lam_l_sq;
        cmp.rows.push_back(row);
    }
    return cmp;
}

}  // namespace polylap
