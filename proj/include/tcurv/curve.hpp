#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "tcurv/roots.hpp"

namespace tcurv {

/// Which coordinate layout the curve uses.
enum class CurveCase {
  Two,      // (e^t, e^-t)
  Odd,      // root-pair coordinates, then e^t
  EvenGe4,  // root-pair coordinates, then e^t, e^-t
};

const char* to_string(CurveCase c);

/// Raw coordinates of the curve past |exponent| > kMaxExponentArgument do not
/// fit in a double; the log-domain quantities in curvature.hpp still do.
inline constexpr double kMaxExponentArgument = 700.0;

class CoordinateOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// The curve in E^n whose coordinates are the real fundamental solutions of
/// y^(n) = y. Immutable after construction.
class CurveSpec {
 public:
  /// Throws std::invalid_argument for n < 2.
  explicit CurveSpec(int n);

  int n() const { return n_; }
  int m() const { return roots_.m(); }
  CurveCase curve_case() const { return case_; }
  bool is_even() const { return case_ != CurveCase::Odd; }
  const RootSet& roots() const { return roots_; }

 private:
  int n_;
  CurveCase case_;
  RootSet roots_;
};

/// A point (or derivative vector) in E^n.
class PointN {
 public:
  PointN() = default;
  explicit PointN(std::vector<double> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  const std::vector<double>& vector() const { return coords_; }

  /// Euclidean norm, scaled to avoid intermediate overflow.
  double norm() const;

 private:
  std::vector<double> coords_;
};

/// Distance ||a - b||. Throws std::invalid_argument on size mismatch.
double distance(const PointN& a, const PointN& b);

/// Coefficients of the p-th derivative of one root pair's coordinates:
///   d^p/dt^p e^{at} cos(bt) = cos_coord.cos_weight e^{at} cos(bt)
///                            + cos_coord.sin_weight e^{at} sin(bt)
/// and likewise for the sin coordinate. (cos_coord.cos_weight,
/// cos_coord.sin_weight) are the real and imaginary parts of (a - bi)^p;
/// (sin_coord.sin_weight, sin_coord.cos_weight) those of (a + bi)^p.
struct DerivCoeffs {
  struct Weights {
    double cos_weight = 0.0;
    double sin_weight = 0.0;
  };
  Weights cos_coord;
  Weights sin_coord;
};

/// Coefficients by complex exponentiation (repeated multiplication).
DerivCoeffs deriv_coeffs(double alpha, double beta, int p);

/// Coefficients by the real first-order recurrence
///   c_{p+1} = alpha c_p + beta s_p,  s_{p+1} = -beta c_p + alpha s_p.
DerivCoeffs deriv_coeffs_recurrence(double alpha, double beta, int p);

/// x(t). Throws CoordinateOverflow past kMaxExponentArgument.
PointN curve_point(const CurveSpec& spec, double t);

/// x^(p)(t), p >= 0. Throws std::invalid_argument for p < 0 and
/// CoordinateOverflow as curve_point.
PointN curve_derivative(const CurveSpec& spec, double t, int p);

/// log ||x'(t)||, finite for every finite t.
double log_speed(const CurveSpec& spec, double t);

/// ||x'(t)|| from the closed form. Saturates to +inf only when the speed
/// itself exceeds the double range; use log_speed there.
double speed(const CurveSpec& spec, double t);

/// 41 equally spaced points on [-5, 5] plus {-20, -10, 10, 20}, ascending.
std::vector<double> standard_grid();

}  // namespace tcurv
