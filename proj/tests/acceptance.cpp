// End-to-end acceptance suite. Each criterion prints exactly one [PASS]/[FAIL]
// line; the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "polylap/bounds.hpp"
#include "polylap/common.hpp"
#include "polylap/eigen.hpp"
#include "polylap/experiments.hpp"
#include "polylap/fourier.hpp"
#include "polylap/lattice.hpp"
#include "polylap/operator.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace polylap;
using namespace polylap::testing;

namespace {

int failures = 0;

class Criterion {
  public:
    explicit Criterion(std::string name) : name_(std::move(name)), start_(clock::now()) {}

    void fail(const std::string& why) {
        ok_ = false;
        if (!why_.empty()) why_ += "; ";
        why_ += why;
    }

    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }

    ~Criterion() {
        const double secs = std::chrono::duration<double>(clock::now() - start_).count();
        if (ok_) {
            std::printf("[PASS] %s (%.1fs)\n", name_.c_str(), secs);
        } else {
            std::printf("[FAIL] %s (%.1fs): %s\n", name_.c_str(), secs, why_.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }

  private:
    using clock = std::chrono::steady_clock;
    std::string name_;
    clock::time_point start_;
    bool ok_ = true;
    std::string why_;
};

std::vector<double> solve_values(const DomainRef& dom, int l) {
    return eigen_sym(assemble(dom, l).matrix, false).eigenvalues;
}

LatticeDomain cube(int d, int side) {
    return make_box(d, Vertex(static_cast<std::size_t>(d), 0),
                    Vertex(static_cast<std::size_t>(d), side - 1));
}

// 1. The C3 example: spectra {1,3} and {3,9}, equality at k = 2.
void criterion_c3() {
    Criterion c("criterion 1: C3 subgraph spectra and order-squaring equality");
    const AmbientGraph c3(3, {{0, 1}, {1, 2}, {2, 0}}, {0, 1});
    const std::vector<double> s1 = solve_values(DomainRef{&c3}, 1);
    const std::vector<double> s2 = solve_values(DomainRef{&c3}, 2);
    c.expect(std::abs(s1[0] - 1.0) <= 1e-10 && std::abs(s1[1] - 3.0) <= 1e-10,
             "order-1 spectrum is not {1, 3}");
    c.expect(std::abs(s2[0] - 3.0) <= 1e-10 && std::abs(s2[1] - 9.0) <= 1e-10,
             "order-2 spectrum is not {3, 9}");
    c.expect(std::abs(s1[1] * s1[1] - s2[1]) <= 1e-10, "(lambda_2^1)^2 != lambda_2^2");
}

// 2. Upper and lower estimates on boxes and balls, d <= 3, l <= 3, |Omega| <= 400.
void criterion_bounds_suite() {
    Criterion c("criterion 2: eigenvalue-sum bounds on boxes and balls (d<=3, l<=3)");

    std::vector<LatticeDomain> domains;
    for (int m : {1, 2, 3, 5, 10, 27, 50, 100, 200, 400}) domains.push_back(cube(1, m));
    for (int r : {0, 1, 3, 10, 50}) domains.push_back(make_ball(1, {0}, r));
    for (int m : {1, 2, 3, 5, 10, 20}) domains.push_back(cube(2, m));
    domains.push_back(make_box(2, {0, 0}, {3, 24}));
    domains.push_back(make_box(2, {0, 0}, {1, 49}));
    for (int r : {0, 1, 2, 3, 5, 8, 13}) domains.push_back(make_ball(2, {0, 0}, r));
    for (int m : {1, 2, 3, 4, 5, 6, 7}) domains.push_back(cube(3, m));
    domains.push_back(make_box(3, {0, 0, 0}, {1, 2, 3}));
    for (int r : {0, 1, 2, 3, 4, 5}) domains.push_back(make_ball(3, {0, 0, 0}, r));

    long long rows_checked = 0;
    for (const LatticeDomain& dom : domains) {
        if (dom.size() > 400) {
            c.fail("roster domain exceeds 400 vertices");
            continue;
        }
        for (int l = 1; l <= 3; ++l) {
            const BoundsReport rep = verify_bounds(dom, l, dom.size());
            for (const BoundRow& row : rep.rows) {
                if (row.ok_upper_mean) ++rows_checked;
                if (row.ok_upper_mean && !*row.ok_upper_mean)
                    c.fail("upper mean bound fails: d=" + std::to_string(rep.d) +
                           " l=" + std::to_string(l) + " n=" + std::to_string(rep.omega_size) +
                           " k=" + std::to_string(row.k));
                if (row.ok_upper_next && !*row.ok_upper_next)
                    c.fail("next-eigenvalue bound fails: d=" + std::to_string(rep.d) +
                           " l=" + std::to_string(l) + " n=" + std::to_string(rep.omega_size) +
                           " k=" + std::to_string(row.k));
                if (row.ok_lower_mean && !*row.ok_lower_mean)
                    c.fail("lower mean bound fails: d=" + std::to_string(rep.d) +
                           " l=" + std::to_string(l) + " n=" + std::to_string(rep.omega_size) +
                           " k=" + std::to_string(row.k));
                if (row.lower_mean && !(*row.lower_mean > 0.0))
                    c.fail("lower bound not positive in range");
            }
        }
    }
    c.expect(rows_checked > 1000, "suspiciously few validity rows checked");
}

// 3. (lambda_k^l)^2 <= lambda_k^{2l}, strict on lattice domains.
void criterion_order_comparison() {
    Criterion c("criterion 3: order-squaring comparison on 100 random domains");
    Rng rng(20240801);
    int lattice_count = 0;
    for (int i = 0; i < 100; ++i) {
        const int l = 1 + (i % 2);
        const bool lattice = i % 5 != 4;  // 80 lattice, 20 ambient graphs
        if (lattice) {
            const int d = 1 + rng.next_below(3);
            const int target = 2 + rng.next_below(119);
            const LatticeDomain dom = random_connected_domain(rng, d, target);
            const OrderComparison cmp = compare_orders(DomainRef{&dom}, l, dom.size());
            ++lattice_count;
            for (const auto& row : cmp.rows) {
                const double scale = OrderComparison::row_scale(row);
                if (!(row.gap > 1e-9 * scale))
                    c.fail("gap not strict on lattice domain i=" + std::to_string(i) +
                           " k=" + std::to_string(row.k));
            }
        } else {
            const int n = 3 + rng.next_below(138);
            const AmbientGraph g = random_ambient_graph(rng, n, rng.next_below(2 * n),
                                                        1 + rng.next_below(std::min(n, 120)));
            const OrderComparison cmp = compare_orders(DomainRef{&g}, l, g.omega_size());
            for (const auto& row : cmp.rows) {
                const double scale = OrderComparison::row_scale(row);
                if (row.gap < -1e-9 * scale)
                    c.fail("gap negative on ambient graph i=" + std::to_string(i) +
                           " k=" + std::to_string(row.k));
            }
        }
    }
    c.expect(lattice_count == 80, "unexpected lattice/ambient split");
}

// 4. Domain monotonicity along 100 random nested pairs, l <= 3.
void criterion_monotonicity() {
    Criterion c("criterion 4: domain monotonicity on 100 nested pairs");
    Rng rng(424242);
    for (int i = 0; i < 100; ++i) {
        const int d = 1 + rng.next_below(3);
        const int n1 = 2 + rng.next_below(60);
        const int n2 = n1 + 1 + rng.next_below(150 - n1);
        const auto [inner, outer] = random_nested_pair(rng, d, n1, n2);
        for (int l = 1; l <= 3; ++l) {
            const std::vector<double> si = solve_values(DomainRef{&inner}, l);
            const std::vector<double> so = solve_values(DomainRef{&outer}, l);
            for (int k = 0; k < inner.size(); ++k)
                if (!(si[static_cast<std::size_t>(k)] >= so[static_cast<std::size_t>(k)] - 1e-9)) {
                    c.fail("monotonicity fails at pair " + std::to_string(i) + " l=" +
                           std::to_string(l) + " k=" + std::to_string(k + 1));
                    break;
                }
        }
    }
}

// 5. Fourier identities on 100 random instances plus the pointwise h_z bound.
void criterion_fourier() {
    Criterion c("criterion 5: lattice Fourier identities on 100 random instances");
    Rng rng(5150);
    for (int i = 0; i < 100; ++i) {
        const int d = 1 + rng.next_below(3);
        const int l = 1 + rng.next_below(3);
        const int target = 3 + rng.next_below(d == 3 ? 40 : 25);
        const LatticeDomain dom = random_connected_domain(rng, d, target, 8);
        const std::vector<double> f = random_vector(rng, dom.size());
        const FourierGrid grid = make_grid(dom, l);

        const FourierCheck pc = plancherel_check(dom, f, grid);
        if (pc.rel_err > 1e-10)
            c.fail("plancherel rel err " + std::to_string(pc.rel_err) + " at i=" + std::to_string(i));
        const FourierCheck qc = polylaplace_fourier_check(dom, f, l, grid);
        if (qc.rel_err > 1e-10)
            c.fail("quadratic-form rel err " + std::to_string(qc.rel_err) + " at i=" + std::to_string(i));

        const double scale = std::pow(4.0 * d, l) * dom.size() + boundary_measure(dom, l).exact;
        const double slack = hz_operator_bound_check(dom, l, grid);
        if (!(slack <= 1e-9 * scale))
            c.fail("h_z bound violated by " + std::to_string(slack) + " at i=" + std::to_string(i));
    }
}

// 6. Path closed form up to m = 500 and the trace identity.
void criterion_eigensolver_oracle() {
    Criterion c("criterion 6: eigensolver against the path closed form and traces");
    for (int m : {1, 2, 3, 10, 50, 200, 500}) {
        const PolyLaplaceOperator op = assemble(cube(1, m), 1);
        const std::vector<double> got = eigen_sym(op.matrix, false).eigenvalues;
        const std::vector<double> want = path_eigenvalues(m);
        double worst = 0.0;
        for (int j = 0; j < m; ++j)
            worst = std::max(worst, std::abs(got[static_cast<std::size_t>(j)] -
                                             want[static_cast<std::size_t>(j)]));
        if (worst > 1e-10)
            c.fail("path m=" + std::to_string(m) + " max err " + std::to_string(worst));
    }

    Rng rng(606);
    for (int i = 0; i < 20; ++i) {
        const int d = 1 + rng.next_below(3);
        const int l = 1 + rng.next_below(3);
        const LatticeDomain dom = random_connected_domain(rng, d, 2 + rng.next_below(60));
        const PolyLaplaceOperator op = assemble(dom, l);
        const std::vector<double> values = eigen_sym(op.matrix, false).eigenvalues;
        KahanSum sum;
        for (double v : values) sum.add(v);
        const double tr = op.matrix.trace();
        if (std::abs(sum.value() - tr) > 1e-10 * std::max(1.0, std::abs(tr)))
            c.fail("trace identity fails at i=" + std::to_string(i));
    }
}

// 7. Appendix ratio series: below one, contracting, limit near c_1.
void criterion_ratio_series() {
    Criterion c("criterion 7: path-graph eigenvalue ratio approaches the beam constant");
    const RatioSeries r = run_ratio_series(1, {25, 50, 100, 200, 400});
    c.expect(r.all_below_one(), "a ratio reached 1");
    for (std::size_t i = 2; i < r.entries.size(); ++i) {
        const double prev = std::abs(r.entries[i - 1].ratio - r.entries[i - 2].ratio);
        const double cur = std::abs(r.entries[i].ratio - r.entries[i - 1].ratio);
        c.expect(cur < prev, "|r(2n) - r(n)| not decreasing");
    }
    c.expect(r.richardson.has_value(), "no extrapolated limit");
    if (r.richardson) {
        const double rel = std::abs(*r.richardson - r.reference) / r.reference;
        c.expect(rel <= 0.02, "extrapolated limit off by " + std::to_string(100 * rel) + "%");
        std::printf("       ratio limit %.6f vs c_1 %.6f (%.3f%%)\n", *r.richardson, r.reference,
                    100 * rel);
    }
}

// 8. Exhaustion toward lambda_1^l(Z^d) = 0 with the k=1 power identity column.
void criterion_exhaustion() {
    Criterion c("criterion 8: exhaustion runs decrease below 1e-2 with consistent columns");
    const double c1 = clamped_beam_constant(1);
    struct Run { int d; int l; std::vector<int> sizes; };
    const std::vector<Run> runs = {
        {1, 1, {10, 20, 40, 80, 200}},
        {1, 2, {10, 20, 40, 80, 200}},
        {2, 1, {5, 11, 21, 43}},
        {2, 2, {5, 11, 21, 43}},
    };
    for (const Run& run : runs) {
        const ExhaustionResult r = run_exhaustion(ExhaustionShape::Box, run.d, run.l, 1, run.sizes);
        const std::string tag = " (d=" + std::to_string(run.d) + " l=" + std::to_string(run.l) + ")";
        c.expect(r.non_increasing(), "lambda_1 not non-increasing" + tag);
        c.expect(r.steps.back().lam_l < 1e-2, "largest domain still above 1e-2" + tag);
        for (const ExhaustionStep& s : r.steps) {
            const double ratio = s.lam1_pow_l / s.lam_l;
            if (run.l == 1) {
                c.expect(std::abs(ratio - 1.0) <= 1e-12, "identity column mismatch" + tag);
            } else {
                c.expect(ratio < 1.0 && ratio > 0.9 * c1, "comparison column out of range" + tag);
            }
        }
    }
}

// 9. Rayleigh-Ritz slack stays nonnegative over 1000 random triples.
void criterion_rayleigh_ritz() {
    Criterion c("criterion 9: Rayleigh-Ritz slack nonnegative on 1000 random triples");
    Rng rng(909090);
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + rng.next_below(19);
        const Matrix m = random_psd_matrix(rng, n);
        const Spectrum s = eigen_sym(m, true);
        const std::vector<double> g = random_vector(rng, n);
        double gg = 0.0;
        for (double x : g) gg += x * x;
        const int k = 1 + rng.next_below(n);
        const double slack = rayleigh_ritz_check(m, g, k, s);
        if (!(slack >= -1e-9 * m.max_abs() * gg))
            c.fail("negative slack " + std::to_string(slack) + " at i=" + std::to_string(i));
    }
}

}  // namespace

int main() {
    criterion_c3();
    criterion_bounds_suite();
    criterion_order_comparison();
    criterion_monotonicity();
    criterion_fourier();
    criterion_eigensolver_oracle();
    criterion_ratio_series();
    criterion_exhaustion();
    criterion_rayleigh_ritz();

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
