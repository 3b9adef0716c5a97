#pragma once

// Brute-force reference computations used to cross-check the library. Nothing
// here calls into the curve, curvature or integrate code; callers pass the
// function under test in.

#include <functional>
#include <span>
#include <vector>

namespace tcurv::oracle {

struct FDConfig {
  double h = 1e-5;
  int richardson_levels = 2;

  /// Throws std::invalid_argument unless 1e-9 < h < 1e-2 and levels >= 0.
  void validate() const;
};

/// Central difference (f(t+h) - f(t-h)) / 2h, refined by Richardson
/// extrapolation over `richardson_levels` step halvings.
std::vector<double> fd_derivative(
    const std::function<std::vector<double>(double)>& f, double t,
    const FDConfig& cfg = {});

/// Scalar convenience wrapper.
double fd_derivative(const std::function<double(double)>& f, double t,
                     const FDConfig& cfg = {});

/// Composite trapezoid rule, no adaptivity. Requires a < b and panels >= 1.
double reference_trapezoid(const std::function<double(double)>& f, double a,
                           double b, long panels);

/// Sum over i < j of (u_i v_j - u_j v_i)^2, in plain double arithmetic.
double lagrange_wedge_sq(std::span<const double> u, std::span<const double> v);

}  // namespace tcurv::oracle
