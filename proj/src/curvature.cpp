#include "tcurv/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "expansion.hpp"
#include "log_sum_exp.hpp"
#include "tcurv/format.hpp"
#include "tcurv/report.hpp"

namespace tcurv {

namespace {

constexpr double kClampFraction = 1e-10;

int binary_exponent(std::span<const double> v) {
  double largest = 0.0;
  for (double c : v) largest = std::max(largest, std::abs(c));
  if (largest == 0.0 || !std::isfinite(largest)) return 0;
  return std::ilogb(largest);
}

std::vector<double> rescaled(std::span<const double> v, int exponent) {
  std::vector<double> out(v.begin(), v.end());
  for (double& c : out) c = std::ldexp(c, -exponent);
  return out;
}

// Gram determinant of u and v after scaling each by a power of two:
//   det = mantissa * 2^(2 (u_exp + v_exp)).
struct ScaledGram {
  double mantissa = 0.0;
  int u_exp = 0;
  int v_exp = 0;
  double u_norm_scaled = 0.0;
};

ScaledGram scaled_gram(const PointN& u, const PointN& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("wedge_norm_sq: dimension mismatch (" +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()) + ")");
  }
  ScaledGram g;
  g.u_exp = binary_exponent(u.coords());
  g.v_exp = binary_exponent(v.coords());
  const auto us = rescaled(u.coords(), g.u_exp);
  const auto vs = rescaled(v.coords(), g.v_exp);

  using detail::Expansion;
  const Expansion uu = Expansion::dot(us, us);
  const Expansion vv = Expansion::dot(vs, vs);
  const Expansion uv = Expansion::dot(us, vs);
  const double scale = uu.estimate() * vv.estimate();
  double det = (uu * vv - uv * uv).estimate();
  if (det < 0.0) {
    if (det >= -kClampFraction * scale) {
      det = 0.0;
    } else {
      throw InternalConsistencyError(
          "negative Gram determinant " + format_real(det) + " at scale " +
          format_real(scale));
    }
  }
  g.mantissa = det;
  g.u_norm_scaled = std::sqrt(uu.estimate());
  return g;
}

// log of the closed-form pieces at t:
//   speed_sq = sum_k e^{2 a_k t} + e^{2t} [+ e^{-2t}]
//   wedge_sq = (sum (1-a_k) e^{2 a_k t} [+ 2 e^{-2t}])
//            * (sum (1+a_k) e^{2 a_k t} + 2 e^{2t})
// The wedge bracket factorises because it is a difference of squares,
// (S + E + F)^2 - (Sa + E - F)^2 with S = sum e^{2 a_k t},
// Sa = sum a_k e^{2 a_k t}, E = e^{2t}, F = e^{-2t} (F = 0 for odd n).
// Both factors are sums of positive terms, so the bracket never goes
// negative and no cancellation occurs.
struct LogPieces {
  double speed_sq;
  double wedge_sq;
};

LogPieces log_pieces(const CurveSpec& spec, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("curve parameter must be finite");
  }
  detail::LogSumExp speed_sq, minus_side, plus_side;
  for (const auto& root : spec.roots().pairs) {
    const double e = 2.0 * root.alpha * t;
    speed_sq.add(e);
    minus_side.add_weighted(std::log1p(-root.alpha), e);
    plus_side.add_weighted(std::log1p(root.alpha), e);
  }
  speed_sq.add(2.0 * t);
  plus_side.add_weighted(std::numbers::ln2, 2.0 * t);
  if (spec.is_even()) {
    speed_sq.add(-2.0 * t);
    minus_side.add_weighted(std::numbers::ln2, -2.0 * t);
  }
  return {speed_sq.value(), minus_side.value() + plus_side.value()};
}

}  // namespace

double wedge_norm_sq(const PointN& u, const PointN& v) {
  const ScaledGram g = scaled_gram(u, v);
  return std::ldexp(g.mantissa, 2 * (g.u_exp + g.v_exp));
}

double k1_general(const CurveSpec& spec, double t) {
  const PointN d1 = curve_derivative(spec, t, 1);
  const PointN d2 = curve_derivative(spec, t, 2);
  if (spec.curve_case() == CurveCase::Two) {
    using detail::Expansion;
    const double det = (Expansion::product(d1[0], d2[1]) -
                        Expansion::product(d1[1], d2[0]))
                           .estimate();
    const double s = d1.norm();
    return det / (s * s * s);
  }
  const ScaledGram g = scaled_gram(d1, d2);
  const double s = g.u_norm_scaled;
  // sqrt(mantissa) 2^(u_exp + v_exp) / (s^3 2^(3 u_exp))
  return std::ldexp(std::sqrt(g.mantissa) / (s * s * s), g.v_exp - 2 * g.u_exp);
}

double log_k1(const CurveSpec& spec, double t) {
  const LogPieces p = log_pieces(spec, t);
  return 0.5 * p.wedge_sq - 1.5 * p.speed_sq;
}

double k1_closed(const CurveSpec& spec, double t) {
  return std::exp(log_k1(spec, t));
}

double log_total_curvature_integrand(const CurveSpec& spec, double t) {
  const LogPieces p = log_pieces(spec, t);
  return 0.5 * p.wedge_sq - p.speed_sq;
}

double total_curvature_integrand(const CurveSpec& spec, double t) {
  return std::exp(log_total_curvature_integrand(spec, t));
}

double substituted_integrand(const CurveSpec& spec, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("substituted_integrand: x must be positive "
                                "and finite, got " + format_real(x));
  }
  const double t = std::log(x);
  return std::exp(log_total_curvature_integrand(spec, t) - t);
}

CurvatureSample curvature_sample(const CurveSpec& spec, double t) {
  const LogPieces p = log_pieces(spec, t);
  CurvatureSample s;
  s.t = t;
  s.speed = std::exp(0.5 * p.speed_sq);
  s.k1 = std::exp(0.5 * p.wedge_sq - 1.5 * p.speed_sq);
  s.integrand = std::exp(0.5 * p.wedge_sq - p.speed_sq);
  return s;
}

std::vector<CurvatureSample> sample_curvature(const CurveSpec& spec, double t0,
                                              double t1, int steps) {
  if (!(t0 < t1)) {
    throw std::invalid_argument("sample_curvature: requires t0 < t1");
  }
  if (steps < 2) {
    throw std::invalid_argument("sample_curvature: requires steps >= 2");
  }
  std::vector<CurvatureSample> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  const double width = t1 - t0;
  for (int i = 0; i <= steps; ++i) {
    const double t = i == steps ? t1 : t0 + width * i / steps;
    rows.push_back(curvature_sample(spec, t));
  }
  return rows;
}

std::string curvature_csv_header() { return "t,speed,k1,K1"; }

std::string to_csv_row(const CurvatureSample& s) {
  const std::array<double, 4> v{s.t, s.speed, s.k1, s.integrand};
  return format_csv_row(v);
}

}  // namespace tcurv
