#include "solti/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "solti/recurrences.hpp"

namespace solti {

namespace {

// Collects the entrywise polynomial C * adj * B given adjugate coefficients.
std::vector<std::vector<Polynomial>> numerators_from_resolvent(
    const Matrix& c, const std::vector<Matrix>& adjugate_coeffs, const Matrix& b) {
    const int p = static_cast<int>(c.rows());
    const int r = static_cast<int>(b.cols());
    std::vector<std::vector<Polynomial>> nums(
        static_cast<size_t>(p), std::vector<Polynomial>(static_cast<size_t>(r)));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < r; ++j) {
            std::vector<double> coeffs(adjugate_coeffs.size(), 0.0);
            for (size_t k = 0; k < adjugate_coeffs.size(); ++k)
                coeffs[k] = (c.row(i) * adjugate_coeffs[k] * b.col(j)).value();
            nums[static_cast<size_t>(i)][static_cast<size_t>(j)] = Polynomial(std::move(coeffs));
        }
    }
    return nums;
}

}  // namespace

ResolventPoly resolvent_poly(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("resolvent_poly requires a square matrix");
    const int n = static_cast<int>(a.rows());
    ResolventPoly out;
    out.adjugate_coeffs.assign(static_cast<size_t>(n), Matrix());
    std::vector<double> char_coeffs(static_cast<size_t>(n) + 1, 0.0);
    char_coeffs[static_cast<size_t>(n)] = 1.0;

    // Faddeev-LeVerrier: B_1 = E, c_{n-k} = -tr(A B_k)/k, B_{k+1} = A B_k + c_{n-k} E.
    Matrix bk = Matrix::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        out.adjugate_coeffs[static_cast<size_t>(n - k)] = bk;
        const double ck = -(a * bk).trace() / k;
        char_coeffs[static_cast<size_t>(n - k)] = ck;
        if (k < n) bk = a * bk + ck * Matrix::Identity(n, n);
    }
    out.charpoly = Polynomial(std::move(char_coeffs));
    return out;
}

RationalTransferMatrix transfer_function(const SecondOrderSystem& sys) {
    require_valid(sys);
    if (sys.r < 1) throw NoInputError("transfer function requires an input channel (r >= 1)");
    if (!sys.a1.isZero(0.0))
        throw UnsupportedFormError(
            "transfer_function handles A1 == 0 only; use transfer_function_general");

    ResolventPoly res = resolvent_poly(sys.a0);
    RationalTransferMatrix h;
    h.numerators = numerators_from_resolvent(sys.c, res.adjugate_coeffs, sys.b);
    for (auto& row : h.numerators)
        for (auto& num : row) num = num.even_substitution();
    h.denominator = res.charpoly.even_substitution();
    return h;
}

RationalTransferMatrix transfer_function_general(const SecondOrderSystem& sys) {
    require_valid(sys);
    if (sys.r < 1) throw NoInputError("transfer function requires an input channel (r >= 1)");

    CompanionForm lift = companion_lift(sys);
    ResolventPoly res = resolvent_poly(lift.a);
    RationalTransferMatrix h;
    h.numerators = numerators_from_resolvent(lift.c, res.adjugate_coeffs, lift.b);
    h.denominator = res.charpoly;
    return h;
}

PoleZeroSet poles_zeros(const RationalTransferMatrix& h) {
    if (!h.is_siso())
        throw UnsupportedFormError("poles_zeros is defined for single-input single-output only");
    const Polynomial& num = h.numerators[0][0];
    if (num.is_zero()) throw ZeroTransferError("transfer function is identically zero");

    PoleZeroSet pz;
    pz.poles = poly_roots(h.denominator);
    if (num.degree() >= 1) pz.zeros = poly_roots(num);
    return pz;
}

CancellationReport cancellation_check(const RationalTransferMatrix& h, double tol) {
    PoleZeroSet pz = poles_zeros(h);
    CancellationReport report;
    std::vector<bool> zero_used(pz.zeros.size(), false);

    // Pair each pole with its nearest unused zero, closest pairs first.
    struct Candidate {
        double dist;
        size_t pole;
        size_t zero;
    };
    std::vector<Candidate> candidates;
    for (size_t i = 0; i < pz.poles.size(); ++i)
        for (size_t j = 0; j < pz.zeros.size(); ++j)
            candidates.push_back({std::abs(pz.poles[i] - pz.zeros[j]), i, j});
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.dist < b.dist; });

    std::vector<bool> pole_used(pz.poles.size(), false);
    for (const auto& cand : candidates) {
        if (pole_used[cand.pole] || zero_used[cand.zero]) continue;
        if (cand.dist >= tol * (1.0 + std::abs(pz.poles[cand.pole]))) break;
        pole_used[cand.pole] = true;
        zero_used[cand.zero] = true;
        report.cancelled_pairs.emplace_back(pz.poles[cand.pole], pz.zeros[cand.zero]);
    }
    return report;
}

Eigen::MatrixXcd evaluate(const RationalTransferMatrix& h, std::complex<double> s) {
    double max_coeff = 0.0;
    for (double c : h.denominator.coeffs()) max_coeff = std::max(max_coeff, std::abs(c));
    const std::complex<double> den = h.denominator.eval(s);
    if (std::abs(den) <= 1e-12 * max_coeff)
        throw PoleEvaluationError("evaluation point is at or near a pole");

    Eigen::MatrixXcd out(h.outputs(), h.inputs());
    for (int i = 0; i < h.outputs(); ++i)
        for (int j = 0; j < h.inputs(); ++j)
            out(i, j) = h.numerators[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(s) / den;
    return out;
}

}  // namespace solti
