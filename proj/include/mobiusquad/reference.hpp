#ifndef MOBIUSQUAD_REFERENCE_HPP
#define MOBIUSQUAD_REFERENCE_HPP

#include <cstdint>

#include "mobiusquad/quadrature.hpp"
#include "mobiusquad/weight.hpp"

namespace mq {

enum class RefMethod { closed_form_moment, tanh_sinh, mobius_highn_crosscheck };

const char* ref_method_name(RefMethod m);

struct ReferenceResult {
  double value = 0.0;
  double est_error = 0.0;
  RefMethod method = RefMethod::tanh_sinh;
  std::int64_t evaluations = 0;
};

// Closed-form moments of the canonical weight:
//   int x^m (1+x^2)^(-upsilon/2) dx = B((m+1)/2, (upsilon-m-1)/2)  (even m),
// zero for odd m.  Requires upsilon > m + 1 for integrability.
double exact_moment(int m, double upsilon);

// Log-gamma via the Lanczos approximation (g = 7, 9 coefficients), accurate
// to ~15 digits for positive arguments; reflection handles x < 0.5.
double log_gamma(double x);

// Ground truth independent of the Mobius rule: double-exponential quadrature
// of f(x) * rho(x) over the real line, split at the origin (x = exp((pi/2)
// sinh t) per half-line, |t| <= 4, dyadic refinement).  Refines until two
// successive levels differ by < tol, then cross-checks against the Mobius
// rule at n = 2^16 (gamma = 1); est_error is the larger of the two
// discrepancies.
//
// Requires f * rho absolutely integrable (caller-asserted; weights with
// upsilon <= 1 are themselves non-integrable and need an f that decays) and
// tol >= 1e-12.
ReferenceResult reference_integral(const Integrand& f, const PolynomialWeight& weight, double tol);

}  // namespace mq

#endif  // MOBIUSQUAD_REFERENCE_HPP
