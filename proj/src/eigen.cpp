#include "polylap/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "polylap/common.hpp"

namespace polylap {

namespace {

constexpr int kMaxSweeps = 50;

std::uint64_t matrix_fingerprint(const Matrix& m) {
    std::uint64_t h = 1469598103934665603ULL;
    for (double x : m.data()) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, sizeof bits);
        for (int b = 0; b < 64; b += 8) {
            h ^= (bits >> b) & 0xffULL;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

// Householder reduction to tridiagonal form. z is overwritten; with vectors it
// ends up holding the accumulated orthogonal transform, otherwise only its
// diagonal stays meaningful. d: diagonal, e: subdiagonal with e[0] = 0.
void tridiagonalize(Matrix& z, std::vector<double>& d, std::vector<double>& e, bool vectors) {
    const int n = z.n();
    d.assign(static_cast<std::size_t>(n), 0.0);
    e.assign(static_cast<std::size_t>(n), 0.0);

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(z.at(i, k));
            if (scale == 0.0) {
                e[static_cast<std::size_t>(i)] = z.at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    z.at(i, k) /= scale;
                    h += z.at(i, k) * z.at(i, k);
                }
                double f = z.at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<std::size_t>(i)] = scale * g;
                h -= f * g;
                z.at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    if (vectors) z.at(j, i) = z.at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += z.at(j, k) * z.at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += z.at(k, j) * z.at(i, k);
                    e[static_cast<std::size_t>(j)] = g / h;
                    f += e[static_cast<std::size_t>(j)] * z.at(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = z.at(i, j);
                    g = e[static_cast<std::size_t>(j)] - hh * f;
                    e[static_cast<std::size_t>(j)] = g;
                    for (int k = 0; k <= j; ++k)
                        z.at(j, k) -= f * e[static_cast<std::size_t>(k)] + g * z.at(i, k);
                }
            }
        } else {
            e[static_cast<std::size_t>(i)] = z.at(i, l);
        }
        d[static_cast<std::size_t>(i)] = h;
    }

    if (vectors) {
        d[0] = 0.0;
        e[0] = 0.0;
        for (int i = 0; i < n; ++i) {
            const int l = i - 1;
            if (d[static_cast<std::size_t>(i)] != 0.0) {
                for (int j = 0; j <= l; ++j) {
                    double g = 0.0;
                    for (int k = 0; k <= l; ++k) g += z.at(i, k) * z.at(k, j);
                    for (int k = 0; k <= l; ++k) z.at(k, j) -= g * z.at(k, i);
                }
            }
            d[static_cast<std::size_t>(i)] = z.at(i, i);
            z.at(i, i) = 1.0;
            for (int j = 0; j <= l; ++j) {
                z.at(j, i) = 0.0;
                z.at(i, j) = 0.0;
            }
        }
    } else {
        for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = z.at(i, i);
        e[0] = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e); e[i] couples d[i] and d[i+1]
// after the initial shift-down. Rotations are applied to z columns when
// vectors are kept.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* z, std::uint64_t fingerprint) {
    const int n = static_cast<int>(d.size());
    const double eps = std::numeric_limits<double>::epsilon();

    for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(n - 1)] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[static_cast<std::size_t>(m)]) + std::abs(d[static_cast<std::size_t>(m + 1)]);
                if (std::abs(e[static_cast<std::size_t>(m)]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw NumericalError("eigensolver did not converge after 50 sweeps (matrix fingerprint " +
                                         std::to_string(fingerprint) + ")");
                double g = (d[static_cast<std::size_t>(l + 1)] - d[static_cast<std::size_t>(l)]) /
                           (2.0 * e[static_cast<std::size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<std::size_t>(m)] - d[static_cast<std::size_t>(l)] +
                    e[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[static_cast<std::size_t>(i)];
                    const double b = c * e[static_cast<std::size_t>(i)];
                    r = std::hypot(f, g);
                    e[static_cast<std::size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        d[static_cast<std::size_t>(i + 1)] -= p;
                        e[static_cast<std::size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<std::size_t>(i + 1)] - p;
                    r = (d[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<std::size_t>(i + 1)] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            f = z->at(k, i + 1);
                            z->at(k, i + 1) = s * z->at(k, i) + c * f;
                            z->at(k, i) = c * z->at(k, i) - s * f;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<std::size_t>(l)] -= p;
                e[static_cast<std::size_t>(l)] = g;
                e[static_cast<std::size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

double Spectrum::max_residual() const {
    if (!residuals || residuals->empty()) return 0.0;
    return *std::max_element(residuals->begin(), residuals->end());
}

Spectrum eigen_sym(const Matrix& m, bool want_vectors) {
    const int n = m.n();
    if (n < 1) throw std::invalid_argument("matrix must be nonempty");
    const double defect = m.symmetry_defect();
    if (defect > 1e-13 * std::max(m.max_abs(), 1.0))
        throw std::invalid_argument("eigen_sym requires a symmetric matrix (defect " +
                                    std::to_string(defect) + ")");

    const std::uint64_t fp = matrix_fingerprint(m);
    Matrix z = m;
    std::vector<double> d, e;
    tridiagonalize(z, d, e, want_vectors);
    ql_implicit(d, e, want_vectors ? &z : nullptr, fp);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });

    Spectrum out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out.eigenvalues[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];

    if (want_vectors) {
        Matrix v(n);
        for (int k = 0; k < n; ++k) {
            const int src = order[static_cast<std::size_t>(k)];
            for (int row = 0; row < n; ++row) v.at(row, k) = z.at(row, src);
        }
        out.eigenvectors = std::move(v);

        std::vector<double> res(static_cast<std::size_t>(n), 0.0);
        const Matrix& vec = *out.eigenvectors;
        for (int k = 0; k < n; ++k) {
            double norm2 = 0.0;
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += m.at(i, j) * vec.at(j, k);
                s -= out.eigenvalues[static_cast<std::size_t>(k)] * vec.at(i, k);
                norm2 += s * s;
            }
            res[static_cast<std::size_t>(k)] = std::sqrt(norm2);
        }
        out.residuals = std::move(res);
    }
    return out;
}

std::vector<double> partial_sums(const Spectrum& s, int k_max) {
    if (k_max < 0 || k_max > static_cast<int>(s.eigenvalues.size()))
        throw std::invalid_argument("k_max out of range");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k_max));
    KahanSum acc;
    for (int k = 0; k < k_max; ++k) {
        acc.add(s.eigenvalues[static_cast<std::size_t>(k)]);
        out.push_back(acc.value());
    }
    return out;
}

double rayleigh_ritz_check(const Matrix& m, std::span<const double> g, int k, const Spectrum& s) {
    const int n = m.n();
    if (!s.eigenvectors) throw std::invalid_argument("rayleigh_ritz_check requires eigenvectors");
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("vector size mismatch");
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");

    const double gamma_next = (k == n) ? 0.0 : s.eigenvalues[static_cast<std::size_t>(k)];

    double gg = 0.0;
    for (double x : g) gg += x * x;

    std::vector<double> mg(static_cast<std::size_t>(n), 0.0);
    m.multiply(std::vector<double>(g.begin(), g.end()), mg);
    double glg = 0.0;
    for (int i = 0; i < n; ++i) glg += g[static_cast<std::size_t>(i)] * mg[static_cast<std::size_t>(i)];

    const Matrix& vec = *s.eigenvectors;
    KahanSum correction;
    for (int j = 0; j < k; ++j) {
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += g[static_cast<std::size_t>(i)] * vec.at(i, j);
        correction.add((gamma_next - s.eigenvalues[static_cast<std::size_t>(j)]) * proj * proj);
    }

    return glg + correction.value() - gamma_next * gg;
}

}  // namespace polylap
