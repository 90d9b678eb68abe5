#ifndef MOBIUSQUAD_ERRORS_HPP
#define MOBIUSQUAD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mq {

enum class Errc {
  // weightfn
  odd_degree,
  non_positive_leading,
  real_root_detected,
  degenerate_constant,
  overflow,
  order_too_high,
  // mobius / generic bad argument
  domain_error,
  // quadrature
  size_out_of_range,
  non_finite_weight,
  non_finite_sample,
  // reference
  not_integrable,
  no_convergence,
  cross_check_failure,
  // convergence
  too_few_points,
  // exprparse
  syntax_error,
  unknown_function,
  arity_mismatch,
  domain_violation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Expression parse error with a byte offset into the source string.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& what, std::size_t offset)
      : Error(code, what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Runtime evaluation error carrying the offending operation and argument.
class EvalError : public Error {
 public:
  EvalError(const std::string& op, double argument);

  const std::string& op() const noexcept { return op_; }
  double argument() const noexcept { return argument_; }

 private:
  std::string op_;
  double argument_;
};

}  // namespace mq

#endif  // MOBIUSQUAD_ERRORS_HPP
