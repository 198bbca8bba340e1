#include "solti/analysis.hpp"

#include "solti/recurrences.hpp"

namespace solti {

namespace {

StructuralReport make_report(Matrix m, int required, double tol_rel) {
    StructuralReport report;
    report.computed_rank = rank(m, tol_rel);
    report.matrix = std::move(m);
    report.required_rank = required;
    report.verdict = report.computed_rank == required;
    report.tol_rel = tol_rel;
    return report;
}

}  // namespace

Matrix observability_matrix(const SecondOrderSystem& sys, int block_rows) {
    require_valid(sys);
    const int n = sys.n;
    const int p = sys.p;
    if (block_rows == kDefaultBlocks) block_rows = 2 * n;
    if (block_rows < 2) throw DimensionError("observability matrix needs at least 2 block rows");

    Matrix o = Matrix::Zero(static_cast<Eigen::Index>(block_rows) * p, 2 * n);
    o.block(0, 0, p, n) = sys.c;
    o.block(p, n, p, n) = sys.c;
    if (block_rows > 2) {
        SPTable table = sp_sequence(sys.a0, sys.a1, block_rows - 3);
        for (int k = 2; k < block_rows; ++k) {
            o.block(static_cast<Eigen::Index>(k) * p, 0, p, n) =
                sys.c * table.s[static_cast<size_t>(k) - 2];
            o.block(static_cast<Eigen::Index>(k) * p, n, p, n) =
                sys.c * table.p[static_cast<size_t>(k) - 2];
        }
    }
    return o;
}

Matrix controllability_matrix(const SecondOrderSystem& sys, int blocks) {
    require_valid(sys);
    if (sys.r < 1) throw NoInputError("controllability matrix requires an input channel (r >= 1)");
    const int n = sys.n;
    const int r = sys.r;
    if (blocks == kDefaultBlocks) blocks = n;
    if (blocks < 1) throw DimensionError("controllability matrix needs at least 1 block");

    MTable table = m_sequence(sys.a0, sys.a1, sys.b, blocks - 1);
    Matrix cm(n, static_cast<Eigen::Index>(blocks) * r);
    for (int k = 0; k < blocks; ++k)
        cm.middleCols(static_cast<Eigen::Index>(k) * r, r) = table.m[static_cast<size_t>(k)];
    return cm;
}

StructuralReport is_observable(const SecondOrderSystem& sys, double tol_rel) {
    return make_report(observability_matrix(sys), 2 * sys.n, tol_rel);
}

StructuralReport is_controllable(const SecondOrderSystem& sys, double tol_rel) {
    return make_report(controllability_matrix(sys), sys.n, tol_rel);
}

Matrix kalman_observability_matrix(const Matrix& a, const Matrix& c, int blocks) {
    if (a.rows() != a.cols()) throw DimensionError("kalman observability: a must be square");
    if (c.cols() != a.rows()) throw DimensionError("kalman observability: c column count must match a");
    const int n = static_cast<int>(a.rows());
    const int p = static_cast<int>(c.rows());
    if (blocks == kDefaultBlocks) blocks = n;
    if (blocks < 1) throw DimensionError("kalman observability: blocks must be positive");

    Matrix o(static_cast<Eigen::Index>(blocks) * p, n);
    Matrix row = c;
    for (int k = 0; k < blocks; ++k) {
        o.middleRows(static_cast<Eigen::Index>(k) * p, p) = row;
        if (k + 1 < blocks) row = row * a;
    }
    return o;
}

Matrix kalman_controllability_matrix(const Matrix& a, const Matrix& b, int blocks) {
    if (a.rows() != a.cols()) throw DimensionError("kalman controllability: a must be square");
    if (b.rows() != a.rows()) throw DimensionError("kalman controllability: b row count must match a");
    const int n = static_cast<int>(a.rows());
    const int r = static_cast<int>(b.cols());
    if (blocks == kDefaultBlocks) blocks = n;
    if (blocks < 1) throw DimensionError("kalman controllability: blocks must be positive");

    Matrix cm(n, static_cast<Eigen::Index>(blocks) * r);
    Matrix col = b;
    for (int k = 0; k < blocks; ++k) {
        cm.middleCols(static_cast<Eigen::Index>(k) * r, r) = col;
        if (k + 1 < blocks) col = a * col;
    }
    return cm;
}

std::string to_string(SpecialCaseReport::Form form) {
    switch (form) {
        case SpecialCaseReport::Form::a1_zero: return "a1_zero";
        case SpecialCaseReport::Form::a0_zero: return "a0_zero";
        default: return "none";
    }
}

SpecialCaseReport analyze_special_cases(const SecondOrderSystem& sys, double tol_rel) {
    require_valid(sys);
    SpecialCaseReport report;
    const Matrix* a = nullptr;
    if (sys.a1.isZero(0.0)) {
        report.form = SpecialCaseReport::Form::a1_zero;
        a = &sys.a0;
    } else if (sys.a0.isZero(0.0)) {
        report.form = SpecialCaseReport::Form::a0_zero;
        a = &sys.a1;
    } else {
        return report;
    }
    report.observability =
        make_report(kalman_observability_matrix(*a, sys.c), sys.n, tol_rel);
    if (sys.r >= 1)
        report.controllability =
            make_report(kalman_controllability_matrix(*a, sys.b), sys.n, tol_rel);
    return report;
}

}  // namespace solti
