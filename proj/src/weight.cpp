#include "mobiusquad/weight.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "mobiusquad/errors.hpp"

namespace mq {

namespace {

constexpr double kRootImagTol = 1e-9;

double require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(Errc::domain_error, std::string(what) + " must be finite");
  return x;
}

double log_q_even(const Polynomial& q, int half_degree, double x) {
  if (std::abs(x) <= 1.0) {
    const double v = q(x);
    if (!(v > 0.0)) {
      throw Error(Errc::domain_error, "weight polynomial evaluated non-positive; invariant broken");
    }
    return std::log(v);
  }
  // q(x) = x^(2m) * qrev(1/x); x^(2m) > 0 since the degree is even.
  const auto& c = q.coeffs();
  std::vector<double> rev(c.rbegin(), c.rend());
  const double r = Polynomial(std::move(rev))(1.0 / x);
  if (!(r > 0.0)) {
    throw Error(Errc::domain_error, "weight polynomial evaluated non-positive; invariant broken");
  }
  return 2.0 * half_degree * std::log(std::abs(x)) + std::log(r);
}

}  // namespace

double PolynomialWeight::log_q(double x) const { return log_q_even(q, half_degree, x); }

double PolynomialWeight::operator()(double x) const { return eval_weight(*this, x); }

bool PolynomialWeight::is_omega() const {
  return q.coeffs() == std::vector<double>{1.0, 0.0, 1.0};
}

PolynomialWeight make_weight(Polynomial q, double upsilon) {
  require_finite(upsilon, "upsilon");
  const int deg = q.degree();
  if (deg == 0) {
    throw Error(Errc::degenerate_constant, "deg q = 0; the weight family requires m >= 1");
  }
  if (deg % 2 != 0) {
    throw Error(Errc::odd_degree, "deg q = " + std::to_string(deg) + " is odd");
  }
  if (!(q.leading() > 0.0)) {
    throw Error(Errc::non_positive_leading, "leading coefficient of q must be positive");
  }
  for (double c : q.coeffs()) require_finite(c, "coefficient of q");
  for (const auto& root : polynomial_roots(q)) {
    if (std::abs(root.imag()) <= kRootImagTol * (1.0 + std::abs(root.real()))) {
      std::ostringstream os;
      os << "q has a real root near x = " << root.real();
      throw Error(Errc::real_root_detected, os.str());
    }
  }
  PolynomialWeight w;
  w.q = std::move(q);
  w.upsilon = upsilon;
  w.half_degree = deg / 2;
  return w;
}

PolynomialWeight make_omega(double upsilon) {
  return make_weight(Polynomial({1.0, 0.0, 1.0}), upsilon);
}

double eval_weight(const PolynomialWeight& w, double x) {
  require_finite(x, "x");
  const double exponent = w.upsilon / (2.0 * w.half_degree);
  const double value = std::exp(-exponent * w.log_q(x));
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "weight not representable at x = " << x << " (upsilon = " << w.upsilon << ")";
    throw Error(Errc::overflow, os.str());
  }
  return value;
}

double WeightDerivativeState::operator()(double x) const {
  const LogAbs num = log_abs_eval(numerator, x);
  if (num.sign == 0) return 0.0;
  return num.sign * std::exp(num.log_abs - exponent_shift * log_q_even(q, half_degree, x));
}

WeightDerivativeState weight_derivative(const PolynomialWeight& w, int tau) {
  if (tau < 0) throw Error(Errc::domain_error, "tau must be nonnegative");
  if (tau > 12) {
    throw Error(Errc::order_too_high,
                "tau = " + std::to_string(tau) + " exceeds the supported order 12");
  }
  const double m2 = 2.0 * w.half_degree;
  const Polynomial qprime = w.q.derivative();
  Polynomial r = Polynomial::one();
  for (int k = 0; k < tau; ++k) {
    r = r.derivative() * w.q - (w.upsilon / m2 + k) * (r * qprime);
  }
  WeightDerivativeState state;
  state.numerator = std::move(r);
  state.tau = tau;
  state.exponent_shift = (w.upsilon + m2 * tau) / m2;
  state.q = w.q;
  state.half_degree = w.half_degree;
  return state;
}

double envelope_ratio(const PolynomialWeight& w, int tau, std::span<const double> xs) {
  if (xs.empty()) throw Error(Errc::domain_error, "grid must be non-empty");
  const WeightDerivativeState deriv = weight_derivative(w, tau);
  const double env_exponent = 0.5 * (w.upsilon + tau);
  double best = 0.0;
  for (double x : xs) {
    require_finite(x, "grid point");
    const LogAbs num = log_abs_eval(deriv.numerator, x);
    if (num.sign == 0) continue;
    const double ratio = std::exp(num.log_abs - deriv.exponent_shift * w.log_q(x) +
                                  env_exponent * std::log1p(x * x));
    if (ratio > best) best = ratio;
  }
  return best;
}

PolynomialWeight parse_weight_spec(std::string_view spec) {
  auto fail = [&](const std::string& msg) -> Error {
    return Error(Errc::syntax_error, "weight spec '" + std::string(spec) + "': " + msg);
  };
  auto parse_real = [&](std::string_view text) {
    std::string buf(text);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(v)) {
      throw fail("bad real '" + buf + "'");
    }
    return v;
  };
  if (spec.rfind("omega:", 0) == 0) {
    return make_omega(parse_real(spec.substr(6)));
  }
  if (spec.rfind("poly:", 0) == 0) {
    const std::string_view body = spec.substr(5);
    const std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) throw fail("missing ';upsilon=' part");
    const std::string_view tail = body.substr(semi + 1);
    if (tail.rfind("upsilon=", 0) != 0) throw fail("expected 'upsilon=' after ';'");
    const double upsilon = parse_real(tail.substr(8));
    std::vector<double> coeffs;
    std::string_view rest = body.substr(0, semi);
    while (true) {
      const std::size_t comma = rest.find(',');
      coeffs.push_back(parse_real(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return make_weight(Polynomial(std::move(coeffs)), upsilon);
  }
  throw fail("expected 'omega:' or 'poly:' prefix");
}

namespace {
std::string real17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

std::string format_weight_spec(const PolynomialWeight& w) {
  if (w.is_omega()) return "omega:" + real17(w.upsilon);
  std::string out = "poly:";
  const auto& c = w.q.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ',';
    out += real17(c[k]);
  }
  out += ";upsilon=" + real17(w.upsilon);
  return out;
}

}  // namespace mq
