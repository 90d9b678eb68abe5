#include "mobiusquad/errors.hpp"

#include <sstream>

namespace mq {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::odd_degree: return "OddDegree";
    case Errc::non_positive_leading: return "NonPositiveLeading";
    case Errc::real_root_detected: return "RealRootDetected";
    case Errc::degenerate_constant: return "DegenerateConstant";
    case Errc::overflow: return "Overflow";
    case Errc::order_too_high: return "OrderTooHigh";
    case Errc::domain_error: return "DomainError";
    case Errc::size_out_of_range: return "SizeOutOfRange";
    case Errc::non_finite_weight: return "NonFiniteWeight";
    case Errc::non_finite_sample: return "NonFiniteSample";
    case Errc::not_integrable: return "NotIntegrable";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::cross_check_failure: return "CrossCheckFailure";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_function: return "UnknownFunction";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::domain_violation: return "DomainViolation";
  }
  return "UnknownError";
}

namespace {
std::string eval_error_message(const std::string& op, double argument) {
  std::ostringstream os;
  os << op << " undefined for argument " << argument;
  return os.str();
}
}  // namespace

EvalError::EvalError(const std::string& op, double argument)
    : Error(Errc::domain_violation, eval_error_message(op, argument)),
      op_(op),
      argument_(argument) {}

}  // namespace mq
