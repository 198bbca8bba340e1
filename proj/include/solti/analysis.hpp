#pragma once

#include <optional>
#include <string>

#include "solti/matcore.hpp"
#include "solti/sysmodel.hpp"

namespace solti {

/// Outcome of one rank criterion.
struct StructuralReport {
    Matrix matrix;
    int computed_rank = 0;
    int required_rank = 0;
    bool verdict = false;
    double tol_rel = kDefaultRankTol;
};

// Pass kDefaultBlocks for the theorem defaults (2n block rows for
// observability, n blocks for controllability).
inline constexpr int kDefaultBlocks = -1;

// Observability matrix of shape (block_rows * p) x 2n:
//   [C | 0], [0 | C], then [C S_{k-2} | C P_{k-2}] for k = 2..block_rows-1.
// block_rows must be at least 2.
Matrix observability_matrix(const SecondOrderSystem& sys, int block_rows = kDefaultBlocks);

// Controllability matrix [M0 : M1 : ... : M_{blocks-1}] of shape n x (blocks * r).
// Requires r >= 1.
Matrix controllability_matrix(const SecondOrderSystem& sys, int blocks = kDefaultBlocks);

// Full-rank tests over the default matrices; required ranks 2n and n.
StructuralReport is_observable(const SecondOrderSystem& sys, double tol_rel = kDefaultRankTol);
StructuralReport is_controllable(const SecondOrderSystem& sys, double tol_rel = kDefaultRankTol);

// Classical Kalman stacks used by the special cases:
//   vertical [C; C A; ...; C A^{blocks-1}] and horizontal [B : A B : ... : A^{blocks-1} B].
Matrix kalman_observability_matrix(const Matrix& a, const Matrix& c, int blocks = kDefaultBlocks);
Matrix kalman_controllability_matrix(const Matrix& a, const Matrix& b, int blocks = kDefaultBlocks);

/// Which structural special case applies, and the Kalman-form verdicts when
/// one does. The controllability half is absent for input-free systems.
struct SpecialCaseReport {
    enum class Form { none, a1_zero, a0_zero };
    Form form = Form::none;
    std::optional<StructuralReport> observability;
    std::optional<StructuralReport> controllability;
};

std::string to_string(SpecialCaseReport::Form form);

SpecialCaseReport analyze_special_cases(const SecondOrderSystem& sys,
                                        double tol_rel = kDefaultRankTol);

}  // namespace solti
