#include "mobiusquad/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mobiusquad/errors.hpp"
#include "mobiusquad/summation.hpp"

namespace mq {

namespace {
constexpr double kPi = std::numbers::pi;
}

NodeSet make_nodes(std::int64_t n) {
  if (n < 1 || n > kMaxNodes) {
    throw Error(Errc::size_out_of_range,
                "n = " + std::to_string(n) + " outside [1, 2^26]");
  }
  NodeSet nodes;
  nodes.n = n;
  nodes.thetas.resize(static_cast<std::size_t>(n));
  const double step = kPi / static_cast<double>(n);
  for (std::int64_t j = 1; j <= n; ++j) {
    // theta_j = 2*pi*j/n - pi/n = (2j - 1) * pi/n
    nodes.thetas[static_cast<std::size_t>(j - 1)] = static_cast<double>(2 * j - 1) * step;
  }
  return nodes;
}

QuadratureRule make_rule(const PolynomialWeight& weight, const MobiusMap& map, std::int64_t n) {
  const NodeSet nodes = make_nodes(n);
  QuadratureRule rule{{}, {}, weight, map};
  rule.nodes_x.resize(nodes.thetas.size());
  rule.weights_w.resize(nodes.thetas.size());
  const double factor = 2.0 * kPi / static_cast<double>(n);
  for (std::size_t j = 0; j < nodes.thetas.size(); ++j) {
    const double theta = nodes.thetas[j];
    const double x = map.forward(theta);
    const double w = factor * eval_weight(weight, x) * map.forward_derivative(theta);
    if (!std::isfinite(x) || !std::isfinite(w)) {
      std::ostringstream os;
      os << "node " << (j + 1) << " of " << n << " not representable (theta = " << theta << ")";
      throw Error(Errc::non_finite_weight, os.str());
    }
    rule.nodes_x[j] = x;
    rule.weights_w[j] = w;
  }
  return rule;
}

double integrate(const QuadratureRule& rule, const Integrand& f) {
  NeumaierSum sum;
  for (std::size_t j = 0; j < rule.nodes_x.size(); ++j) {
    const double fx = f(rule.nodes_x[j]);
    if (!std::isfinite(fx)) {
      std::ostringstream os;
      os << "integrand returned " << fx << " at node j = " << (j + 1)
         << ", x = " << rule.nodes_x[j];
      throw Error(Errc::non_finite_sample, os.str());
    }
    sum.add(rule.weights_w[j] * fx);
  }
  return sum.value();
}

std::function<double(double)> transform_integrand(const PolynomialWeight& weight,
                                                  const MobiusMap& map, Integrand f) {
  return [weight, map, f = std::move(f)](double theta) {
    const double x = map.forward(theta);
    return f(x) * eval_weight(weight, x) * map.forward_derivative(theta);
  };
}

}  // namespace mq
