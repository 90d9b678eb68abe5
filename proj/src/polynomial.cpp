#include "mobiusquad/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace mq {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> c(p.coeffs_);
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

LogAbs log_abs_eval(const Polynomial& p, double x) {
  const double v = p(x);
  if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  if (std::isfinite(v)) return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
  // Direct evaluation overflowed: p(x) = x^deg * prev(1/x) with reversed
  // coefficients; prev(1/x) is O(leading) for large |x|, hence representable.
  const auto& c = p.coeffs();
  std::vector<double> rev(c.rbegin(), c.rend());
  const double r = Polynomial(std::move(rev))(1.0 / x);
  const int deg = p.degree();
  int sign = r > 0.0 ? 1 : (r < 0.0 ? -1 : 0);
  if (x < 0.0 && deg % 2 != 0) sign = -sign;
  if (sign == 0) return {-std::numeric_limits<double>::infinity(), 0};
  return {deg * std::log(std::abs(x)) + std::log(std::abs(r)), sign};
}

std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
  const int deg = p.degree();
  if (deg < 1) throw std::invalid_argument("polynomial_roots: constant polynomial");
  const auto& c = p.coeffs();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()[i];
  return roots;
}

}  // namespace mq
