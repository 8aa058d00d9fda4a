#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "polylap/common.hpp"
#include "polylap/eigen.hpp"
#include "polylap/fourier.hpp"
#include "support/generators.hpp"

using namespace polylap;
using namespace polylap::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("phi symbol") {
    CHECK(phi(std::vector<double>{0.0, 0.0}) == doctest::Approx(0.0));
    CHECK(phi(std::vector<double>{kPi, kPi, kPi}) == doctest::Approx(12.0));
    CHECK(phi(std::vector<double>{kPi / 2}) == doctest::Approx(2.0));
}

TEST_CASE("hz inner products") {
    const LatticeDomain dom = make_box(2, {0, 0}, {2, 2});
    CHECK(hz_inner(dom, std::vector<double>(9, 1.0), std::vector<double>{0.0, 0.0}).real() ==
          doctest::Approx(9.0));

    std::vector<double> indicator(9, 0.0);
    indicator[static_cast<std::size_t>(dom.index_of({1, 2}))] = 1.0;
    const auto val = hz_inner(dom, indicator, std::vector<double>{0.3, -0.7});
    CHECK(std::abs(val) == doctest::Approx(1.0));
    CHECK(val.real() == doctest::Approx(std::cos(0.3 - 1.4)));

    // alternating sum at z = pi on a path
    const LatticeDomain path = make_box(1, {0}, {4});
    const std::vector<double> f{1.0, 2.0, 3.0, 4.0, 5.0};
    const auto alt = hz_inner(path, f, std::vector<double>{kPi});
    CHECK(alt.real() == doctest::Approx(1.0 - 2.0 + 3.0 - 4.0 + 5.0));
    CHECK(alt.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("uniform grids integrate pure exponentials exactly") {
    const FourierGrid grid{2, 9};
    for (int m0 = -8; m0 <= 8; ++m0)
        for (int m1 = -8; m1 <= 8; ++m1) {
            std::complex<double> acc = 0.0;
            for (int j0 = 0; j0 < 9; ++j0)
                for (int j1 = 0; j1 < 9; ++j1) {
                    const double z0 = grid.node_coord(j0), z1 = grid.node_coord(j1);
                    const double arg = m0 * z0 + m1 * z1;
                    acc += std::complex<double>(std::cos(arg), std::sin(arg));
                }
            acc *= std::pow(2.0 * kPi / 9.0, 2);
            const double want = (m0 == 0 && m1 == 0) ? std::pow(2.0 * kPi, 2) : 0.0;
            CHECK(std::abs(acc.real() - want) <= 1e-13 * std::pow(2.0 * kPi, 2));
            CHECK(std::abs(acc.imag()) <= 1e-13 * std::pow(2.0 * kPi, 2));
        }
}

TEST_CASE("grid sizing rule and certificate") {
    const LatticeDomain dom = make_box(2, {0, 0}, {5, 3});
    CHECK(coordinate_extent(dom) == 5);
    const FourierGrid grid = make_grid(dom, 2);
    CHECK(grid.points_per_dim == 2 * (5 + 2) + 1);
    CHECK(grid.certificate_ok(5, 2));

    try {
        plancherel_check(dom, std::vector<double>(dom.size(), 1.0), FourierGrid{2, 5});
        FAIL("expected certificate error");
    } catch (const GridCertificateError& e) {
        CHECK(e.got_n == 5);
        CHECK(e.required_n == 11);
        CHECK(std::string(e.what()).find("11") != std::string::npos);
    }
}

TEST_CASE("plancherel identity") {
    // single-vertex indicator
    const LatticeDomain one = make_box(2, {0, 0}, {0, 0});
    const FourierCheck c0 = plancherel_check(one, std::vector<double>{1.0}, make_grid(one, 0));
    CHECK(c0.lhs == doctest::Approx(1.0));
    CHECK(c0.rhs == doctest::Approx(1.0));

    // f = 1 on {0..3}, N = 9
    const LatticeDomain seg = make_box(1, {0}, {3});
    const FourierCheck c1 = plancherel_check(seg, std::vector<double>(4, 1.0), FourierGrid{1, 9});
    CHECK(c1.lhs == doctest::Approx(4.0));
    CHECK(c1.rhs == doctest::Approx(4.0).epsilon(1e-12));

    // random f on {0..5}^2, N = 16
    Rng rng(101);
    const LatticeDomain box = make_box(2, {0, 0}, {5, 5});
    const std::vector<double> f = random_vector(rng, box.size());
    const FourierCheck c2 = plancherel_check(box, f, FourierGrid{2, 16});
    CHECK(c2.rel_err <= 1e-11);
}

TEST_CASE("poly-laplace quadratic form identity") {
    const LatticeDomain one = make_box(1, {0}, {0});
    const FourierCheck c1 = polylaplace_fourier_check(one, std::vector<double>{1.0}, 1, make_grid(one, 1));
    CHECK(c1.lhs == doctest::Approx(2.0));
    CHECK(c1.rhs == doctest::Approx(2.0).epsilon(1e-13));

    const FourierCheck c2 = polylaplace_fourier_check(one, std::vector<double>{1.0}, 2, make_grid(one, 2));
    CHECK(c2.lhs == doctest::Approx(6.0));
    CHECK(c2.rhs == doctest::Approx(6.0).epsilon(1e-13));

    Rng rng(103);
    const LatticeDomain box = make_box(2, {0, 0}, {4, 4});
    const std::vector<double> f = random_vector(rng, box.size());
    const FourierCheck c3 = polylaplace_fourier_check(box, f, 2, make_grid(box, 2));
    CHECK(c3.rel_err <= 1e-10);
}

TEST_CASE("both identities hold over random instances") {
    Rng rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 1 + rng.next_below(3);
        const int l = 1 + rng.next_below(3);
        const LatticeDomain dom = random_connected_domain(rng, d, 3 + rng.next_below(18), 8);
        const std::vector<double> f = random_vector(rng, dom.size());
        const FourierGrid grid = make_grid(dom, l);
        CHECK(plancherel_check(dom, f, grid).rel_err <= 1e-10);
        CHECK(polylaplace_fourier_check(dom, f, l, grid).rel_err <= 1e-10);
    }
}

TEST_CASE("character quadratic form bound holds at every node") {
    const LatticeDomain path = make_box(1, {0}, {9});
    CHECK(hz_operator_bound_check(path, 1, make_grid(path, 1)) <= 1e-9 * (4.0 * 10 + 2.0));

    const LatticeDomain box = make_box(2, {0, 0}, {5, 5});
    const double scale2 = std::pow(8.0, 2) * box.size() + boundary_measure(box, 2).exact;
    CHECK(hz_operator_bound_check(box, 2, make_grid(box, 2)) <= 1e-9 * scale2);

    // z = 0 case by hand: |sum of all matrix entries| <= |partial^l Omega|
    const PolyLaplaceOperator op = assemble(box, 2);
    double total = 0.0;
    for (int i = 0; i < op.n; ++i)
        for (int j = 0; j < op.n; ++j) total += op.matrix.at(i, j);
    CHECK(std::abs(total) <= boundary_measure(box, 2).exact + 1e-9);
}

TEST_CASE("phi dominates its quartic lower bound on [-pi, pi]^d") {
    for (int d : {1, 2}) {
        const int steps = d == 1 ? 2001 : 101;
        std::vector<double> z(static_cast<std::size_t>(d));
        std::vector<int> idx(static_cast<std::size_t>(d), 0);
        for (;;) {
            double norm2 = 0.0;
            for (int a = 0; a < d; ++a) {
                z[static_cast<std::size_t>(a)] = -kPi + 2.0 * kPi * idx[static_cast<std::size_t>(a)] / (steps - 1);
                norm2 += z[static_cast<std::size_t>(a)] * z[static_cast<std::size_t>(a)];
            }
            const double p = phi(z);
            CHECK(p >= -1e-13);
            CHECK(p <= 4.0 * d + 1e-13);
            if (std::sqrt(norm2) <= kPi) {
                const double h = norm2 - norm2 * norm2 / 12.0;
                for (int l = 1; l <= 3; ++l)
                    CHECK(std::pow(p, l) >= std::pow(h, l) - 1e-10);
            }
            int a = d - 1;
            while (a >= 0) {
                auto ua = static_cast<std::size_t>(a);
                if (++idx[ua] < steps) break;
                idx[ua] = 0;
                --a;
            }
            if (a < 0) break;
        }
    }
}

TEST_CASE("no-l2-eigenfunction residual table") {
    // single vertex: residual is |(2d)^l - lam|
    const ResidualTable t1 = no_l2_eigenfunction_demo(1, 1, 1.25, {1});
    CHECK(t1.rows[0].residual == doctest::Approx(std::abs(2.0 - 1.25)).epsilon(1e-9));
    const ResidualTable t2 = no_l2_eigenfunction_demo(2, 2, 3.0, {1});
    CHECK(t2.rows[0].residual == doctest::Approx(std::abs(16.0 + 2.0 * 2.0 - 3.0)).epsilon(1e-9));

    // residuals strictly positive on growing windows
    const ResidualTable t3 = no_l2_eigenfunction_demo(1, 1, 2.0, {10, 20, 40});
    for (const auto& row : t3.rows) CHECK(row.residual > 0.0);

    // cross-check against the direct spectrum distance
    for (const auto& row : t3.rows) {
        const Spectrum s = eigen_sym(assemble(make_box(1, {0}, {row.size - 1}), 1).matrix, false);
        double best = 1e300;
        for (double v : s.eigenvalues) best = std::min(best, std::abs(v - 2.0));
        CHECK(row.residual == doctest::Approx(best).epsilon(1e-7));
    }

    // lam outside the symbol range [0, (4d)^l]
    const ResidualTable t4 = no_l2_eigenfunction_demo(1, 1, 20.0, {5, 10});
    for (const auto& row : t4.rows) CHECK(row.residual >= 16.0 - 1e-9);

    CHECK_THROWS_AS(no_l2_eigenfunction_demo(1, 1, -1.0, {3}), std::invalid_argument);
}
