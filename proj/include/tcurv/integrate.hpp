#pragma once

#include <functional>

#include "tcurv/curve.hpp"

namespace tcurv {

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 60;
  long max_evals = 10'000'000;

  /// Throws std::invalid_argument unless all fields are positive and
  /// max_depth >= 10.
  void validate() const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evals = 0;
  bool converged = false;
};

/// One 15-point Gauss-Kronrod panel and its embedded 7-point Gauss value.
struct RulePair {
  double kronrod = 0.0;
  double gauss = 0.0;
};
RulePair gauss_kronrod_15(const std::function<double(double)>& f, double a,
                          double b);

/// Adaptive bisection with the 7/15 Gauss-Kronrod pair. A panel is accepted
/// once |K15 - G7| is within its share of the tolerance, shares being
/// proportional to panel length. Node placement and summation order are
/// fixed, so results are bit-reproducible. Hitting max_depth or max_evals
/// yields converged = false with the best estimate; non-finite samples do
/// too. Throws std::invalid_argument unless a < b.
IntegralResult adaptive_quad(const std::function<double(double)>& f, double a,
                             double b, const QuadConfig& cfg = {});

/// Integral of the speed over [t0, t1].
IntegralResult arc_length(const CurveSpec& spec, double t0, double t1,
                          const QuadConfig& cfg = {});

/// Integral of k1 * speed over [a, b].
IntegralResult truncated_total_curvature(const CurveSpec& spec, double a,
                                         double b, const QuadConfig& cfg = {});

/// Positive-parameter total curvature with its certificate.
///
/// `integral.value` is the integral over [0, cutoff]; the remainder over
/// [cutoff, inf) lies in [0, tail_cap] by the majorant, and tail_cap is folded
/// into `integral.error_estimate`.
struct TailIntegral {
  IntegralResult integral;
  double cutoff = 0.0;
  double tail_cap = 0.0;
  int rungs = 0;
};

inline constexpr double kDefaultTailTol = 1e-8;

/// Integral of k1 * speed over [0, inf) by a truncation ladder b = 1, 2, 4, ...
/// that stops once the analytic tail cap drops below tail_tol. converged is
/// true only when that happens with every piece converged within max_evals.
TailIntegral positive_tail_total_curvature(const CurveSpec& spec,
                                           const QuadConfig& cfg = {},
                                           double tail_tol = kDefaultTailTol);

}  // namespace tcurv
