#pragma once

#include <cmath>
#include <limits>

namespace tcurv::detail {

// Streaming log(sum_i e^{x_i}). The running sum is kept relative to the
// largest exponent seen so far, so no term overflows or underflows early.
class LogSumExp {
 public:
  void add(double x) {
    if (x == -std::numeric_limits<double>::infinity()) return;
    if (x > max_) {
      sum_ = sum_ * std::exp(max_ - x) + 1.0;
      max_ = x;
    } else {
      sum_ += std::exp(x - max_);
    }
  }

  // log(weight * e^x), weight > 0.
  void add_weighted(double log_weight, double x) { add(log_weight + x); }

  bool empty() const { return sum_ == 0.0; }

  double value() const {
    if (sum_ == 0.0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

}  // namespace tcurv::detail
