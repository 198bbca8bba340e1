#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "solti/matcore.hpp"
#include "solti/polynomial.hpp"
#include "solti/sysmodel.hpp"

namespace solti {

/// Polynomial form of the resolvent: adj(lambda*E - A) = sum_k N_k lambda^k
/// with N_{n-1} = E, together with the monic characteristic polynomial, so
/// (lambda*E - A)^{-1} = adj(lambda) / charpoly(lambda).
struct ResolventPoly {
    std::vector<Matrix> adjugate_coeffs;  // N_0 .. N_{n-1}, ascending powers
    Polynomial charpoly;                  // monic, degree n
};

/// p x r matrix of numerator polynomials over one common monic denominator.
struct RationalTransferMatrix {
    std::vector<std::vector<Polynomial>> numerators;  // [p][r]
    Polynomial denominator;
    int outputs() const { return static_cast<int>(numerators.size()); }
    int inputs() const { return numerators.empty() ? 0 : static_cast<int>(numerators.front().size()); }
    bool is_siso() const { return outputs() == 1 && inputs() == 1; }
};

struct PoleZeroSet {
    std::vector<std::complex<double>> poles;
    std::vector<std::complex<double>> zeros;
};

struct CancellationReport {
    std::vector<std::pair<std::complex<double>, std::complex<double>>> cancelled_pairs;
};

// Faddeev-LeVerrier recursion; exact up to rounding for integer matrices.
ResolventPoly resolvent_poly(const Matrix& a);

// H(s) = C (s^2 E - A0)^{-1} B for systems with A1 == 0. Denominator is
// charpoly(s^2), so only even powers appear. No common factors are removed.
RationalTransferMatrix transfer_function(const SecondOrderSystem& sys);

// [C | 0] (s E_2n - A_lift)^{-1} B_lift via the companion lift; works for
// any A1 and matches transfer_function when A1 == 0.
RationalTransferMatrix transfer_function_general(const SecondOrderSystem& sys);

// SISO only: denominator roots and numerator roots, with multiplicity.
PoleZeroSet poles_zeros(const RationalTransferMatrix& h);

// Greedy nearest-first pole/zero matching; a pair (rho, zeta) cancels when
// |rho - zeta| < tol * (1 + |rho|).
CancellationReport cancellation_check(const RationalTransferMatrix& h, double tol = 1e-8);

// Entrywise numerators(s) / denominator(s); throws PoleEvaluationError when
// |denominator(s)| <= 1e-12 * max |denominator coefficient|.
Eigen::MatrixXcd evaluate(const RationalTransferMatrix& h, std::complex<double> s);

}  // namespace solti
