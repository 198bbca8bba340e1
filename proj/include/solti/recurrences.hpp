#pragma once

#include <vector>

#include "solti/matcore.hpp"
#include "solti/sysmodel.hpp"

namespace solti {

/// Coefficient tables of the propagated state:
///   S0 = A0, P0 = A1, S_k = P_{k-1} A0, P_k = S_{k-1} + P_{k-1} A1.
struct SPTable {
    std::vector<Matrix> s;
    std::vector<Matrix> p;
};

/// Input-propagation sequence:
///   M0 = B, M1 = A1 B, M_k = A0 M_{k-2} + A1 M_{k-1}.
struct MTable {
    std::vector<Matrix> m;
};

/// First-order 2n-dimensional companion form; powers of `a` encode the
/// S/P tables and serve as the verification oracle.
struct CompanionForm {
    Matrix a;  // [[0, I], [A0, A1]], 2n x 2n
    Matrix b;  // [[0], [B]],         2n x r
    Matrix c;  // [C, 0],             p x 2n
};

// Tables with indices 0..k_max inclusive. k_max must be nonnegative.
SPTable sp_sequence(const Matrix& a0, const Matrix& a1, int k_max);
MTable m_sequence(const Matrix& a0, const Matrix& a1, const Matrix& b, int k_max);

CompanionForm companion_lift(const SecondOrderSystem& sys);

}  // namespace solti
