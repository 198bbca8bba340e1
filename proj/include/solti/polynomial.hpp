#pragma once

#include <complex>
#include <string>
#include <vector>

#include "solti/errors.hpp"

namespace solti {

/// Real polynomial, coefficients stored ascending with trailing zeros
/// trimmed. An empty coefficient list is the zero polynomial.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }

    const std::vector<double>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0.0;
    }
    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    std::complex<double> eval(std::complex<double> x) const;
    double eval(double x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(double scalar) const;

    // Substitutes x -> x^2: the coefficient of x^k moves to x^(2k).
    Polynomial even_substitution() const;

    // Human-readable rendering, highest power first, e.g. "s^4 - 6s^2 + 5".
    std::string to_string(const std::string& var = "s") const;

  private:
    std::vector<double> coeffs_;
};

// All roots (with multiplicity) as eigenvalues of the companion matrix of
// the monic-normalized polynomial. Degree must be at least 1.
std::vector<std::complex<double>> poly_roots(const Polynomial& p);

}  // namespace solti
