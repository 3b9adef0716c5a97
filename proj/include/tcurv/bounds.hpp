#pragma once

#include <optional>

#include "tcurv/curve.hpp"

namespace tcurv {

/// Comparison constants for the substituted integrand f(x), x = e^t.
///
///   x > 1:              f(x) < majorant_const / x^(1 + delta)
///   0 < x < 1, odd n:   f(x) > minorant_const / x
///
/// epsilon = 1 - alpha_1 and delta = epsilon / 2. For n = 2 the majorant is
/// 2 / x^2, encoded as majorant_const = 2 with delta = 1 (alpha_1 taken as -1).
struct BoundConstants {
  double epsilon = 0.0;
  double delta = 0.0;
  double majorant_const = 0.0;
  std::optional<double> minorant_const;

  /// Decay exponent of the majorant, 1 + delta.
  double majorant_exponent() const { return 1.0 + delta; }

  /// Majorant evaluated at x.
  double majorant(double x) const;

  /// Upper bound on the integral of the integrand over [b, inf) in t,
  /// i.e. over [e^b, inf) in x: majorant_const / (delta e^(b delta)).
  double tail_cap(double b) const;

  /// Integral of the majorant over [1, inf): majorant_const / delta.
  double majorant_integral() const { return majorant_const / delta; }
};

BoundConstants bound_constants(const CurveSpec& spec);

}  // namespace tcurv
