#ifndef MOBIUSQUAD_MOBIUS_HPP
#define MOBIUSQUAD_MOBIUS_HPP

#include <cmath>
#include <numbers>

#include "mobiusquad/errors.hpp"

namespace mq {

// Change of variables between the torus parameter theta in (0, 2*pi) and the
// real line, induced by the Mobius transformation that maps the unit circle
// onto the line:  x = phi(theta) = -gamma * cot(theta/2).
//
// The half-angle cotangent is evaluated as cos/sin directly so behavior near
// the endpoints degrades to large finite values instead of losing the sign.
class MobiusMap {
 public:
  explicit MobiusMap(double gamma = 1.0) : gamma_(gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
      throw Error(Errc::domain_error, "gamma must be positive and finite");
    }
  }

  double gamma() const { return gamma_; }

  // phi(theta); strictly increasing on (0, 2*pi).
  double forward(double theta) const {
    check_theta(theta);
    const double h = 0.5 * theta;
    return -gamma_ * std::cos(h) / std::sin(h);
  }

  // phi'(theta) = gamma / (2 sin^2(theta/2)) > 0.
  double forward_derivative(double theta) const {
    check_theta(theta);
    const double s = std::sin(0.5 * theta);
    return gamma_ / (2.0 * s * s);
  }

  // phi^{-1}(x) = 2 arccot(-x/gamma), with arccot valued in (0, pi); realized
  // as the two-argument arctangent for branch correctness at x = 0.
  double inverse(double x) const {
    if (!std::isfinite(x)) throw Error(Errc::domain_error, "x must be finite");
    return 2.0 * std::atan2(gamma_, -x);
  }

  // (phi^{-1})'(x) = 2 gamma / (gamma^2 + x^2).
  double inverse_derivative(double x) const {
    if (!std::isfinite(x)) throw Error(Errc::domain_error, "x must be finite");
    return 2.0 * gamma_ / (gamma_ * gamma_ + x * x);
  }

 private:
  static void check_theta(double theta) {
    if (!(theta > 0.0) || !(theta < 2.0 * std::numbers::pi)) {
      throw Error(Errc::domain_error, "theta must lie strictly inside (0, 2*pi)");
    }
  }

  double gamma_;
};

}  // namespace mq

#endif  // MOBIUSQUAD_MOBIUS_HPP
