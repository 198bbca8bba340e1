// Test-only helpers: independent oracles and random-system generators.
// The oracles intentionally avoid the library's code paths (no SVD, no LU,
// no recurrence tables) so they can cross-check them.
#pragma once

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "solti/matcore.hpp"
#include "solti/sysmodel.hpp"

namespace testsupport {

using solti::Matrix;
using solti::Vector;

// Determinant by recursive cofactor expansion along the first row.
inline double oracle_determinant(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double det = 0.0;
    for (int j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int col = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                minor(i - 1, col++) = m(i, k);
            }
        }
        det += ((j % 2 == 0) ? 1.0 : -1.0) * m(0, j) * oracle_determinant(minor);
    }
    return det;
}

// Rank by Gaussian elimination with partial pivoting.
inline int oracle_rank(Matrix m, double tol = 1e-9) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = row;
        for (int i = row + 1; i < m.rows(); ++i)
            if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
        if (std::abs(m(pivot, col)) <= tol * scale) continue;
        m.row(pivot).swap(m.row(row));
        for (int i = row + 1; i < m.rows(); ++i)
            m.row(i) -= (m(i, col) / m(row, col)) * m.row(row);
        ++rank;
        ++row;
    }
    return rank;
}

// Matrix power by repeated multiplication.
inline Matrix oracle_power(const Matrix& a, int k) {
    Matrix result = Matrix::Identity(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) result = result * a;
    return result;
}

inline Matrix random_matrix(std::mt19937& rng, int rows, int cols, double lo = -2.0,
                            double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

inline Vector random_vector(std::mt19937& rng, int size, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Vector v(size);
    for (int i = 0; i < size; ++i) v(i) = dist(rng);
    return v;
}

inline solti::SecondOrderSystem random_system(std::mt19937& rng, int n, int r, int p,
                                              solti::TimeDomain kind = solti::TimeDomain::discrete) {
    solti::SecondOrderSystem sys;
    sys.kind = kind;
    sys.n = n;
    sys.r = r;
    sys.p = p;
    sys.a0 = random_matrix(rng, n, n);
    sys.a1 = random_matrix(rng, n, n);
    sys.b = random_matrix(rng, n, r);
    sys.c = random_matrix(rng, p, n);
    return sys;
}

// Nonsingular matrix with condition number below max_cond.
inline Matrix well_conditioned_matrix(std::mt19937& rng, int n, double max_cond = 100.0) {
    for (;;) {
        Matrix t = random_matrix(rng, n, n);
        Eigen::JacobiSVD<Matrix> svd(t);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) > 0 && sv(0) / sv(sv.size() - 1) < max_cond) return t;
    }
}

struct CliResult {
    int exit_code;
    std::string output;
};

// Runs a shell command, capturing stdout (stderr folded in).
inline CliResult run_command(const std::string& command) {
    CliResult result{-1, {}};
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testsupport
