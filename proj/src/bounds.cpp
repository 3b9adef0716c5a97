#include "tcurv/bounds.hpp"

#include <cmath>

namespace tcurv {

double BoundConstants::majorant(double x) const {
  return majorant_const * std::exp(-majorant_exponent() * std::log(x));
}

double BoundConstants::tail_cap(double b) const {
  return majorant_const / delta * std::exp(-b * delta);
}

BoundConstants bound_constants(const CurveSpec& spec) {
  BoundConstants bc;
  const double m = spec.m();
  switch (spec.curve_case()) {
    case CurveCase::Two:
      // 2x / (1 + x^4) < 2 / x^2 on [1, inf)
      bc.epsilon = 2.0;
      bc.delta = 1.0;
      bc.majorant_const = 2.0;
      break;
    case CurveCase::Odd: {
      const double alpha1 = spec.roots().pairs.front().alpha;
      bc.epsilon = 1.0 - alpha1;
      bc.delta = 0.5 * bc.epsilon;
      bc.majorant_const = std::sqrt(m * m + 4.0 * m);
      bc.minorant_const = std::sqrt(0.5 * (1.0 - alpha1));
      break;
    }
    case CurveCase::EvenGe4: {
      const double alpha1 = spec.roots().pairs.front().alpha;
      bc.epsilon = 1.0 - alpha1;
      bc.delta = 0.5 * bc.epsilon;
      bc.majorant_const = std::sqrt(8.0 * m * m + 8.0 * m);
      break;
    }
  }
  return bc;
}

}  // namespace tcurv
