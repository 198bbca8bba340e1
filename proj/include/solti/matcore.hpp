#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "solti/errors.hpp"

namespace solti {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;

// Builds a matrix from nested rows, rejecting NaN/Inf and ragged input.
Matrix make_matrix(const std::vector<std::vector<double>>& rows);

// Numerical rank: number of singular values above tol_rel * sigma_max.
int rank(const Matrix& m, double tol_rel = kDefaultRankTol);

// Determinant via partial-pivoting LU. Throws DimensionError if non-square.
double determinant(const Matrix& m);

struct LeastSquaresSolution {
    Vector solution;
    double residual_norm;
};

// Minimum-norm least-squares solve using the SVD pseudoinverse; singular
// values below tol_rel * sigma_max are treated as zero.
LeastSquaresSolution solve_min_norm(const Matrix& a, const Vector& rhs,
                                    double tol_rel = kDefaultRankTol);

}  // namespace solti
