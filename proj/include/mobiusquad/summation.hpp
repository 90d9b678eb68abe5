#ifndef MOBIUSQUAD_SUMMATION_HPP
#define MOBIUSQUAD_SUMMATION_HPP

#include <cmath>

namespace mq {

// Neumaier compensated summation; the correction also captures the case where
// the incoming term is larger than the running sum.
class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace mq

#endif  // MOBIUSQUAD_SUMMATION_HPP
