#ifndef MOBIUSQUAD_WEIGHT_HPP
#define MOBIUSQUAD_WEIGHT_HPP

#include <span>
#include <string>
#include <string_view>

#include "mobiusquad/polynomial.hpp"

namespace mq {

// Weight family q(x)^(-upsilon/2m) for a positive polynomial q of even degree
// 2m.  Immutable after construction through make_weight / make_omega; all
// evaluation goes through log space so that q(x) may overflow while the weight
// itself stays representable.
struct PolynomialWeight {
  Polynomial q;
  double upsilon = 0.0;
  int half_degree = 0;  // m, with deg q = 2m

  double operator()(double x) const;

  // log q(x); finite for every finite x (q has no real roots).
  double log_q(double x) const;

  bool is_omega() const;
};

// Validates q: even degree >= 2, positive leading coefficient, no real roots
// (companion-matrix eigenvalues, rejected when |Im| <= 1e-9 * (1 + |Re|)).
PolynomialWeight make_weight(Polynomial q, double upsilon);

// The canonical weight (1 + x^2)^(-upsilon/2).
PolynomialWeight make_omega(double upsilon);

double eval_weight(const PolynomialWeight& w, double x);

// Evaluator for the tau-th derivative of the weight, built by the closed
// recurrence on the numerator polynomial:
//   rho^(tau)(x) = r_tau(x) * q(x)^(-(upsilon + 2 m tau)/2m),
//   r_0 = 1,  r_(tau+1) = r_tau' * q - (upsilon/2m + tau) * r_tau * q'.
struct WeightDerivativeState {
  Polynomial numerator;   // r_tau, degree <= (2m-1) tau
  int tau = 0;
  double exponent_shift;  // (upsilon + 2 m tau) / 2m
  Polynomial q;
  int half_degree = 0;

  double operator()(double x) const;
};

// tau is capped at 12: the recurrence's coefficients grow combinatorially and
// double precision degrades beyond that.
WeightDerivativeState weight_derivative(const PolynomialWeight& w, int tau);

// max over xs of |rho^(tau)(x)| / omega_(upsilon+tau)(x), computed in log
// space.  Bounded grids confirm the derivative envelope property.
double envelope_ratio(const PolynomialWeight& w, int tau, std::span<const double> xs);

// Textual format used by the CLI and config files:
//   omega:<upsilon>
//   poly:<c0>,<c1>,...,<c2m>;upsilon=<v>
PolynomialWeight parse_weight_spec(std::string_view spec);
std::string format_weight_spec(const PolynomialWeight& w);

}  // namespace mq

#endif  // MOBIUSQUAD_WEIGHT_HPP
