#include "solti/matcore.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace solti {

Matrix make_matrix(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw DimensionError("matrix must have at least one row");
    const auto cols = rows.front().size();
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionError("ragged rows: row " + std::to_string(i) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(cols));
        for (size_t j = 0; j < cols; ++j) {
            if (!std::isfinite(rows[i][j]))
                throw NonFiniteError("non-finite entry at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return m;
}

int rank(const Matrix& m, double tol_rel) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    if (sigma_max == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol_rel * sigma_max) ++r;
    return r;
}

double determinant(const Matrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant requires a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (m.rows() == 0) return 1.0;
    return m.partialPivLu().determinant();
}

LeastSquaresSolution solve_min_norm(const Matrix& a, const Vector& rhs, double tol_rel) {
    if (a.rows() != rhs.rows())
        throw DimensionError("solve_min_norm: " + std::to_string(a.rows()) +
                             " rows vs rhs length " + std::to_string(rhs.rows()));
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(tol_rel);
    Vector x = svd.solve(rhs);
    double residual = (a * x - rhs).norm();
    return {std::move(x), residual};
}

}  // namespace solti
