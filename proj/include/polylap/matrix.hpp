#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace polylap {

/// Dense square matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

    int n() const { return n_; }
    double& at(int i, int j) { return a_[idx(i, j)]; }
    double at(int i, int j) const { return a_[idx(i, j)]; }
    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    double symmetry_defect() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) m = std::max(m, std::abs(at(i, j) - at(j, i)));
        return m;
    }

    void symmetrize() {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                const double v = 0.5 * (at(i, j) + at(j, i));
                at(i, j) = v;
                at(j, i) = v;
            }
    }

    /// y = A x
    void multiply(const std::vector<double>& x, std::vector<double>& y) const {
        y.assign(static_cast<std::size_t>(n_), 0.0);
        for (int i = 0; i < n_; ++i) {
            const double* row = &a_[idx(i, 0)];
            double s = 0.0;
            for (int j = 0; j < n_; ++j) s += row[j] * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
    }

    Matrix operator*(const Matrix& rhs) const {
        Matrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const double aik = at(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
            }
        return out;
    }

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<double> a_;
};

}  // namespace polylap
