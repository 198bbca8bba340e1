#include "solti/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "solti/matcore.hpp"

namespace solti {

namespace {

void trim_trailing_zeros(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

// Prints integer-valued coefficients without a decimal point.
std::string format_coeff(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(v);
        return os.str();
    }
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw NonFiniteError("non-finite polynomial coefficient");
    trim_trailing_zeros(coeffs_);
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> out(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + other * -1.0;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<double> out(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double scalar) const {
    std::vector<double> out(coeffs_);
    for (double& c : out) c *= scalar;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::even_substitution() const {
    if (is_zero()) return Polynomial();
    std::vector<double> out(2 * coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        double c = coeff(k);
        if (c == 0.0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        double mag = std::abs(c);
        if (k == 0 || mag != 1.0) os << format_coeff(mag);
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

std::vector<std::complex<double>> poly_roots(const Polynomial& p) {
    const int deg = p.degree();
    if (deg < 1) throw DegeneratePolynomialError("roots require degree >= 1");
    // Companion matrix of the monic-normalized polynomial.
    Matrix companion = Matrix::Zero(deg, deg);
    const double lead = p.leading();
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p.coeff(i) / lead;
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
    return roots;
}

}  // namespace solti
