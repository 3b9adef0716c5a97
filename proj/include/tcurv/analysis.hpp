#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tcurv/bounds.hpp"
#include "tcurv/integrate.hpp"
#include "tcurv/report.hpp"

namespace tcurv {

/// Beyond this dimension the alpha gaps shrink and delta -> 0 makes the tail
/// ladder long. An engineering limit, overridable per call.
inline constexpr int kDefaultMaxDimension = 64;

/// One truncation of the negative-parameter tail: the integral over [a, 0]
/// against the analytic lower bound slope * |a|.
struct LadderRung {
  double a = 0.0;
  IntegralResult integral;
  double minorant = 0.0;
};

/// Evidence that the negative tail diverges: every rung beats slope * |a|.
struct DivergentWitness {
  double slope = 0.0;
  std::vector<LadderRung> ladder;
};

struct ConvergenceVerdict {
  int n = 0;
  BoundConstants bounds;
  bool total_finite = false;
  TailIntegral positive_tail;
  std::variant<IntegralResult, DivergentWitness> negative_tail;
  /// Even n: 2 * integral of the majorant over [1, inf).
  std::optional<double> certified_upper_bound;
  /// Even n: positive tail doubled by the t -> -t symmetry.
  std::optional<double> total;

  bool converged() const;
  const DivergentWitness* witness() const {
    return std::get_if<DivergentWitness>(&negative_tail);
  }
};

struct ClassifyOptions {
  double tail_tol = kDefaultTailTol;
  std::vector<double> ladder{-5.0, -10.0, -20.0, -40.0};
  int max_dimension = kDefaultMaxDimension;
};

/// Checks the majorant at every x > 1 (x >= 1 for n = 2) and, for odd n, the
/// minorant at every 0 < x < 1. Residuals are the margins (bound side minus
/// integrand side, oriented so positive means the inequality holds).
ValidationReport pointwise_bound_check(const CurveSpec& spec,
                                       const std::vector<double>& xs);

/// Finite/infinite total curvature. Even n: positive tail doubled, with the
/// certified bound. Odd n: finite positive tail plus a divergence ladder.
/// Throws std::invalid_argument if spec.n() exceeds options.max_dimension and
/// InternalConsistencyError if a ladder rung misses its minorant by more than
/// the quadrature error, or a tail exceeds its majorant integral.
ConvergenceVerdict classify(const CurveSpec& spec, const QuadConfig& cfg = {},
                            const ClassifyOptions& options = {});

/// arc_length(0, b) >= e^b - 1 and the matching negative-side bound:
/// (e^(b |alpha_m|) - 1) / |alpha_m| for odd n, e^b - 1 for even n. b = 0 is
/// vacuous.
ValidationReport infinite_length_check(const CurveSpec& spec,
                                       const std::vector<double>& bs,
                                       const QuadConfig& cfg = {});

/// n log-spaced points on [lo, hi].
std::vector<double> log_spaced(double lo, double hi, int count);

/// Human-readable certificate.
std::string to_text(const ConvergenceVerdict& verdict);
/// One key=value datum per line.
std::string to_key_values(const ConvergenceVerdict& verdict);

}  // namespace tcurv
