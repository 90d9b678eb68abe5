#ifndef MOBIUSQUAD_POLYNOMIAL_HPP
#define MOBIUSQUAD_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace mq {

// Dense real polynomial, coefficients stored ascending: coeffs[k] * x^k.
// Trailing zero coefficients are trimmed at construction so that the stored
// leading coefficient is nonzero; the zero polynomial is kept as {0}.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial one() { return Polynomial({1.0}); }

  // Horner evaluation; p(0) returns coeffs[0] exactly.
  double operator()(double x) const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.back(); }

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& p);

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<double> coeffs_;
};

// log|p(x)| together with sign(p(x)).  Evaluates directly when the result is
// representable; for |x| > 1 it switches to the reversed-coefficient form
// p(x) = x^deg * prev(1/x), which keeps the logarithm finite when p(x) itself
// would overflow.  sign = 0 iff p(x) == 0.
struct LogAbs {
  double log_abs;
  int sign;
};
LogAbs log_abs_eval(const Polynomial& p, double x);

// All complex roots via the companion-matrix eigenvalue method.
// Requires a non-constant polynomial.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

}  // namespace mq

#endif  // MOBIUSQUAD_POLYNOMIAL_HPP
