#pragma once

#include <string>
#include <vector>

#include "tcurv/curve.hpp"

namespace tcurv {

/// One row of curvature data along the curve.
struct CurvatureSample {
  double t = 0.0;
  double speed = 0.0;
  double k1 = 0.0;
  double integrand = 0.0;  // k1 * speed, the total-curvature integrand
};

/// <u,u><v,v> - <u,v>^2, the squared norm of u ^ v.
///
/// Evaluated exactly on the given doubles (floating-point expansions after a
/// power-of-two rescale) and rounded once, so nearly parallel vectors keep
/// full relative accuracy. A negative result within 1e-10 <u,u><v,v> is
/// clamped to zero; anything below that throws InternalConsistencyError.
/// Throws std::invalid_argument on dimension mismatch. Returns +inf if the
/// result exceeds the double range.
double wedge_norm_sq(const PointN& u, const PointN& v);

/// First curvature from the explicit derivative vectors:
/// |x' ^ x''| / |x'|^3 for n >= 3, det[x' x''] / |x'|^3 (signed) for n = 2.
/// Propagates CoordinateOverflow from curve_derivative.
double k1_general(const CurveSpec& spec, double t);

/// log k1(t) from the closed form, finite for every finite t.
double log_k1(const CurveSpec& spec, double t);

/// First curvature from the closed form, evaluated in the log domain.
double k1_closed(const CurveSpec& spec, double t);

/// log of k1(t) * ||x'(t)||.
double log_total_curvature_integrand(const CurveSpec& spec, double t);

/// k1(t) * ||x'(t)|| evaluated as one ratio (the exponent scale cancels), not
/// as a product of separately computed factors.
double total_curvature_integrand(const CurveSpec& spec, double t);

/// The integrand after x = e^t: total_curvature_integrand(log x) / x.
/// Throws std::invalid_argument for x <= 0 or non-finite x.
double substituted_integrand(const CurveSpec& spec, double x);

CurvatureSample curvature_sample(const CurveSpec& spec, double t);

/// steps + 1 equally spaced samples on [t0, t1]. Requires t0 < t1 and
/// steps >= 2 (std::invalid_argument otherwise).
std::vector<CurvatureSample> sample_curvature(const CurveSpec& spec, double t0,
                                              double t1, int steps);

/// "t,speed,k1,K1"
std::string curvature_csv_header();
std::string to_csv_row(const CurvatureSample& sample);

}  // namespace tcurv
