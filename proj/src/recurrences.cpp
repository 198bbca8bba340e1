#include "solti/recurrences.hpp"

namespace solti {

SPTable sp_sequence(const Matrix& a0, const Matrix& a1, int k_max) {
    if (a0.rows() != a0.cols() || a1.rows() != a1.cols() || a0.rows() != a1.rows())
        throw DimensionError("sp_sequence: a0 and a1 must be square and the same size");
    if (k_max < 0) throw DimensionError("sp_sequence: k_max must be nonnegative");
    SPTable table;
    table.s.reserve(static_cast<size_t>(k_max) + 1);
    table.p.reserve(static_cast<size_t>(k_max) + 1);
    table.s.push_back(a0);
    table.p.push_back(a1);
    for (int k = 1; k <= k_max; ++k) {
        table.s.push_back(table.p.back() * a0);
        table.p.push_back(table.s[static_cast<size_t>(k) - 1] + table.p.back() * a1);
    }
    return table;
}

MTable m_sequence(const Matrix& a0, const Matrix& a1, const Matrix& b, int k_max) {
    if (a0.rows() != a0.cols() || a1.rows() != a1.cols() || a0.rows() != a1.rows())
        throw DimensionError("m_sequence: a0 and a1 must be square and the same size");
    if (b.rows() != a0.rows()) throw DimensionError("m_sequence: b row count must match a0");
    if (k_max < 0) throw DimensionError("m_sequence: k_max must be nonnegative");
    MTable table;
    table.m.reserve(static_cast<size_t>(k_max) + 1);
    table.m.push_back(b);
    if (k_max >= 1) table.m.push_back(a1 * b);
    for (int k = 2; k <= k_max; ++k)
        table.m.push_back(a0 * table.m[static_cast<size_t>(k) - 2] +
                          a1 * table.m[static_cast<size_t>(k) - 1]);
    return table;
}

CompanionForm companion_lift(const SecondOrderSystem& sys) {
    require_valid(sys);
    const int n = sys.n;
    CompanionForm lift;
    lift.a = Matrix::Zero(2 * n, 2 * n);
    lift.a.topRightCorner(n, n) = Matrix::Identity(n, n);
    lift.a.bottomLeftCorner(n, n) = sys.a0;
    lift.a.bottomRightCorner(n, n) = sys.a1;
    lift.b = Matrix::Zero(2 * n, sys.r);
    lift.b.bottomRows(n) = sys.b;
    lift.c = Matrix::Zero(sys.p, 2 * n);
    lift.c.leftCols(n) = sys.c;
    return lift;
}

}  // namespace solti
