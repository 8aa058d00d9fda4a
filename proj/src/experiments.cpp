#include "polylap/experiments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polylap/common.hpp"
#include "polylap/eigen.hpp"
#include "polylap/lattice.hpp"
#include "polylap/operator.hpp"

namespace polylap {

namespace {

constexpr double kPi = std::numbers::pi;

LatticeDomain exhaustion_domain(ExhaustionShape shape, int d, int size) {
    LatticeDomain dom = shape == ExhaustionShape::Box
                            ? make_box(d, Vertex(static_cast<std::size_t>(d), 0),
                                       Vertex(static_cast<std::size_t>(d), size))
                            : make_ball(d, Vertex(static_cast<std::size_t>(d), 0), size);
    if (dom.size() > kFullSpectrumCap)
        throw std::invalid_argument("domain of size " + std::to_string(dom.size()) +
                                    " exceeds the full-spectrum cap of " +
                                    std::to_string(kFullSpectrumCap));
    return dom;
}

double kth_eigenvalue(const LatticeDomain& dom, int l, int k) {
    const PolyLaplaceOperator op = assemble(dom, l);
    const Spectrum spec = eigen_sym(op.matrix, false);
    return spec.eigenvalues[static_cast<std::size_t>(k - 1)];
}

}  // namespace

bool ExhaustionResult::non_increasing(double tol) const {
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (steps[i].lam_l > steps[i - 1].lam_l + tol) return false;
    return true;
}

ExhaustionResult run_exhaustion(ExhaustionShape shape, int d, int l, int k,
                                const std::vector<int>& sizes) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (sizes.empty()) throw std::invalid_argument("size list must be nonempty");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("size list must be strictly increasing (nested domains)");
    if (sizes.front() < 0) throw std::invalid_argument("sizes must be >= 0");

    ExhaustionResult out;
    out.d = d;
    out.l = l;
    out.k = k;
    for (int size : sizes) {
        const LatticeDomain dom = exhaustion_domain(shape, d, size);
        if (k > dom.size())
            throw std::invalid_argument("k exceeds |Omega| at size " + std::to_string(size));
        ExhaustionStep step;
        step.size = size;
        step.omega_size = dom.size();
        step.lam_l = kth_eigenvalue(dom, l, k);
        const double lam1 = (l == 1) ? step.lam_l : kth_eigenvalue(dom, 1, k);
        step.lam1_pow_l = std::pow(lam1, l);
        out.steps.push_back(step);
    }
    return out;
}

double clamped_beam_root(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const auto g = [](double b) { return std::cos(b) * std::cosh(b) - 1.0; };

    // Bisection down to a narrow interval, then Newton polish.
    double lo = (k + 0.5) * kPi - 1.0;
    double hi = (k + 0.5) * kPi + 1.0;
    if ((g(lo) < 0.0) == (g(hi) < 0.0))
        throw NumericalError("clamped beam bracket does not straddle a root");
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) < 0.0) == (g(lo) < 0.0)) lo = mid;
        else hi = mid;
    }
    double b = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
        const double gb = g(b);
        const double db = std::cos(b) * std::sinh(b) - std::sin(b) * std::cosh(b);
        const double step = gb / db;
        b -= step;
        if (std::abs(step) <= 1e-12 * std::abs(b)) break;
    }
    if (std::abs(g(b)) > 1e-10 * std::cosh(b))
        throw NumericalError("clamped beam root did not converge for k=" + std::to_string(k));
    return b;
}

double clamped_beam_constant(int k) {
    const double beta = clamped_beam_root(k);
    return std::pow(k * kPi / beta, 4);
}

bool RatioSeries::all_below_one() const {
    for (const auto& e : entries)
        if (!(e.ratio < 1.0)) return false;
    return true;
}

RatioSeries run_ratio_series(int k, const std::vector<int>& n_list) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (n_list.empty()) throw std::invalid_argument("n list must be nonempty");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1]) throw std::invalid_argument("n list must be strictly increasing");
    if (n_list.back() > 2000) throw std::invalid_argument("n capped at 2000");

    RatioSeries out;
    out.k = k;
    out.reference = clamped_beam_constant(k);
    for (int n : n_list) {
        const LatticeDomain path = make_box(1, Vertex{0}, Vertex{n});
        if (k > path.size()) throw std::invalid_argument("k exceeds |Omega| for n=" + std::to_string(n));
        const double lam1 = kth_eigenvalue(path, 1, k);
        const double lam2 = kth_eigenvalue(path, 2, k);
        out.entries.push_back(RatioEntry{n, lam1 * lam1 / lam2});
    }
    out.richardson = richardson_limit(out.entries);
    return out;
}

std::optional<double> richardson_limit(const std::vector<RatioEntry>& entries) {
    const std::size_t m = entries.size();
    if (m < 3) return std::nullopt;
    const double n0 = entries[m - 3].n, n1 = entries[m - 2].n, n2 = entries[m - 1].n;
    const double rho1 = n1 / n0, rho2 = n2 / n1;
    if (std::abs(rho1 - rho2) > 0.01 * rho2) return std::nullopt;  // not geometric

    const double r0 = entries[m - 3].ratio, r1 = entries[m - 2].ratio, r2 = entries[m - 1].ratio;
    const double d1 = r1 - r0, d2 = r2 - r1;
    if (d2 == 0.0 || d1 / d2 <= 1.0) return std::nullopt;  // order not estimable
    const double p = std::log(d1 / d2) / std::log(rho2);
    return r2 + d2 / (std::pow(rho2, p) - 1.0);
}

}  // namespace polylap
