#include "tcurv/curve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "log_sum_exp.hpp"

namespace tcurv {

const char* to_string(CurveCase c) {
  switch (c) {
    case CurveCase::Two: return "two";
    case CurveCase::Odd: return "odd";
    case CurveCase::EvenGe4: return "even";
  }
  return "unknown";
}

CurveSpec::CurveSpec(int n)
    : n_(n),
      case_(n == 2 ? CurveCase::Two
                   : (n % 2 == 1 ? CurveCase::Odd : CurveCase::EvenGe4)),
      roots_(characteristic_roots(n)) {}

double PointN::norm() const {
  double scale = 0.0;
  for (double c : coords_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (double c : coords_) {
    const double r = c / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

double distance(const PointN& a, const PointN& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return PointN(std::move(diff)).norm();
}

DerivCoeffs deriv_coeffs(double alpha, double beta, int p) {
  if (p < 0) throw std::invalid_argument("derivative order must be >= 0");
  const std::complex<double> lower(alpha, -beta);
  const std::complex<double> upper(alpha, beta);
  std::complex<double> lo_pow(1.0, 0.0);
  std::complex<double> up_pow(1.0, 0.0);
  for (int i = 0; i < p; ++i) {
    lo_pow *= lower;
    up_pow *= upper;
  }
  DerivCoeffs c;
  c.cos_coord = {lo_pow.real(), lo_pow.imag()};
  c.sin_coord = {up_pow.imag(), up_pow.real()};
  return c;
}

DerivCoeffs deriv_coeffs_recurrence(double alpha, double beta, int p) {
  if (p < 0) throw std::invalid_argument("derivative order must be >= 0");
  // cos coordinate: (A, B) with A' = alpha A + beta B, B' = -beta A + alpha B
  double a = 1.0, b = 0.0;
  // sin coordinate: (C, D) with C' = alpha C - beta D, D' = beta C + alpha D
  double c = 1.0, d = 0.0;
  for (int i = 0; i < p; ++i) {
    const double a_next = alpha * a + beta * b;
    const double b_next = -beta * a + alpha * b;
    const double c_next = alpha * c - beta * d;
    const double d_next = beta * c + alpha * d;
    a = a_next;
    b = b_next;
    c = c_next;
    d = d_next;
  }
  DerivCoeffs out;
  out.cos_coord = {a, b};
  out.sin_coord = {d, c};
  return out;
}

namespace {

void check_exponent(double arg, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("curve parameter must be finite");
  }
  if (std::abs(arg) > kMaxExponentArgument) {
    throw CoordinateOverflow(
        "curve coordinate e^(" + std::to_string(arg) +
        ") exceeds the representable range; use the log-domain curvature "
        "operations for |t| this large");
  }
}

}  // namespace

PointN curve_point(const CurveSpec& spec, double t) {
  return curve_derivative(spec, t, 0);
}

PointN curve_derivative(const CurveSpec& spec, double t, int p) {
  if (p < 0) throw std::invalid_argument("derivative order must be >= 0");
  check_exponent(t, t);

  std::vector<double> x;
  x.reserve(static_cast<std::size_t>(spec.n()));
  for (const auto& root : spec.roots().pairs) {
    const double arg = root.alpha * t;
    check_exponent(arg, t);
    const double growth = std::exp(arg);
    const double ec = growth * std::cos(root.beta * t);
    const double es = growth * std::sin(root.beta * t);
    const DerivCoeffs k = deriv_coeffs(root.alpha, root.beta, p);
    x.push_back(k.cos_coord.cos_weight * ec + k.cos_coord.sin_weight * es);
    x.push_back(k.sin_coord.sin_weight * es + k.sin_coord.cos_weight * ec);
  }
  x.push_back(std::exp(t));
  if (spec.is_even()) {
    x.push_back((p % 2 == 0 ? 1.0 : -1.0) * std::exp(-t));
  }
  return PointN(std::move(x));
}

double log_speed(const CurveSpec& spec, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("curve parameter must be finite");
  }
  // ||x'||^2 = sum_k e^{2 alpha_k t} + e^{2t} (+ e^{-2t} for even n)
  detail::LogSumExp lse;
  for (const auto& root : spec.roots().pairs) lse.add(2.0 * root.alpha * t);
  lse.add(2.0 * t);
  if (spec.is_even()) lse.add(-2.0 * t);
  return 0.5 * lse.value();
}

double speed(const CurveSpec& spec, double t) {
  return std::exp(log_speed(spec, t));
}

std::vector<double> standard_grid() {
  std::vector<double> grid{-20.0, -10.0};
  for (int i = 0; i <= 40; ++i) grid.push_back(-5.0 + 0.25 * i);
  grid.push_back(10.0);
  grid.push_back(20.0);
  return grid;
}

}  // namespace tcurv
