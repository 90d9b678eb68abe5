#ifndef MOBIUSQUAD_QUADRATURE_HPP
#define MOBIUSQUAD_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mobiusquad/mobius.hpp"
#include "mobiusquad/weight.hpp"

namespace mq {

using Integrand = std::function<double(double)>;

// Shifted trapezoidal angles theta_j = 2*pi*j/n - pi/n, j = 1..n; the shift
// keeps every node strictly inside (0, 2*pi).
struct NodeSet {
  std::int64_t n = 0;
  std::vector<double> thetas;
};

inline constexpr std::int64_t kMaxNodes = std::int64_t{1} << 26;

NodeSet make_nodes(std::int64_t n);

// Precomputed rule on the real line: x_j = phi(theta_j),
// w_j = (2*pi/n) * rho(x_j) * phi'(theta_j).  Nodes strictly increasing,
// weights strictly positive.  Immutable after construction; integrate() is
// pure given a pure integrand.
struct QuadratureRule {
  std::vector<double> nodes_x;
  std::vector<double> weights_w;
  PolynomialWeight weight;
  MobiusMap map;

  std::int64_t size() const { return static_cast<std::int64_t>(nodes_x.size()); }
};

QuadratureRule make_rule(const PolynomialWeight& weight, const MobiusMap& map, std::int64_t n);

// sum_j w_j f(x_j) with Neumaier compensated summation, nodes visited in
// ascending theta order; deterministic for fixed inputs.
double integrate(const QuadratureRule& rule, const Integrand& f);

// The pullback theta -> f(phi(theta)) * rho(phi(theta)) * phi'(theta), i.e.
// the periodic integrand the trapezoidal rule actually sees.  Diagnostic
// surface: endpoint decay, torus plots, brute-force equivalence checks.
std::function<double(double)> transform_integrand(const PolynomialWeight& weight,
                                                  const MobiusMap& map, Integrand f);

}  // namespace mq

#endif  // MOBIUSQUAD_QUADRATURE_HPP
