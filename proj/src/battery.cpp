#include "tcurv/battery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tcurv/analysis.hpp"
#include "tcurv/curvature.hpp"
#include "tcurv/format.hpp"
#include "tcurv/oracle.hpp"

namespace tcurv {

namespace {

constexpr double kOdeTol = 1e-9;
constexpr double kOdeStrictTol = 1e-6;
constexpr double kCoeffTol = 1e-13;
constexpr double kSpeedTol = 1e-12;
constexpr double kFdTol = 1e-6;
constexpr double kParityTol = 1e-12;
constexpr double kClosedVsGeneralTol = 1e-9;
constexpr double kGramTol = 1e-10;
constexpr double kIntegrandTol = 1e-11;
// Below this |t| the strict speed minorant is resolvable in double precision.
constexpr double kStrictMinorantRange = 5.0;

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<double> battery_grid(bool quick) {
  std::vector<double> grid = standard_grid();
  if (!quick) return grid;
  std::vector<double> thin;
  for (std::size_t i = 0; i < grid.size(); i += 4) thin.push_back(grid[i]);
  if (thin.back() != grid.back()) thin.push_back(grid.back());
  return thin;
}

void ode_checks(const CurveSpec& spec, const std::vector<double>& grid,
                ValidationReport& report) {
  const int n = spec.n();
  double worst = 0.0;
  for (double t : grid) {
    const PointN x = curve_point(spec, t);
    worst = std::max(worst, distance(curve_derivative(spec, t, n), x) / x.norm());
  }
  report.add("curve.ode_identity", worst <= kOdeTol, worst,
             "max |x^(n) - x| / |x|");

  double weakest = std::numeric_limits<double>::infinity();
  int weakest_q = 0;
  for (int q = 1; q < n; ++q) {
    double dev = 0.0;
    for (double t : grid) {
      const PointN x = curve_point(spec, t);
      dev = std::max(dev, distance(curve_derivative(spec, t, q), x) / x.norm());
    }
    if (dev < weakest) {
      weakest = dev;
      weakest_q = q;
    }
  }
  if (n > 1 && weakest_q > 0) {
    report.add("curve.ode_strict_below_n", weakest > kOdeStrictTol, weakest,
               "weakest order q=" + std::to_string(weakest_q));
  }
}

void coefficient_checks(const CurveSpec& spec, ValidationReport& report) {
  const int n = spec.n();
  double closure = 0.0;
  double order_n = 0.0;
  for (const auto& r : spec.roots().pairs) {
    for (int p = 0; p <= 4 * n; ++p) {
      const DerivCoeffs a = deriv_coeffs(r.alpha, r.beta, p);
      const DerivCoeffs b = deriv_coeffs_recurrence(r.alpha, r.beta, p);
      closure = std::max({closure,
                          std::abs(a.cos_coord.cos_weight - b.cos_coord.cos_weight),
                          std::abs(a.cos_coord.sin_weight - b.cos_coord.sin_weight),
                          std::abs(a.sin_coord.cos_weight - b.sin_coord.cos_weight),
                          std::abs(a.sin_coord.sin_weight - b.sin_coord.sin_weight)});
    }
    const DerivCoeffs c = deriv_coeffs(r.alpha, r.beta, n);
    order_n = std::max({order_n, std::abs(c.cos_coord.cos_weight - 1.0),
                        std::abs(c.cos_coord.sin_weight),
                        std::abs(c.sin_coord.sin_weight - 1.0),
                        std::abs(c.sin_coord.cos_weight)});
  }
  report.add("curve.coeff_closure", closure <= kCoeffTol, closure,
             "recurrence vs complex power, p <= 4n");
  report.add("curve.coeff_order_n", order_n <= 1e-12, order_n,
             "(alpha -/+ beta i)^n = 1");
}

void speed_checks(const CurveSpec& spec, const std::vector<double>& grid,
                  ValidationReport& report) {
  double worst = 0.0;
  double parity = 0.0;
  double excess = std::numeric_limits<double>::infinity();
  bool minorant_ok = true;
  for (double t : grid) {
    const double s = speed(spec, t);
    worst = std::max(worst, rel(s, curve_derivative(spec, t, 1).norm()));
    if (spec.is_even()) parity = std::max(parity, rel(s, speed(spec, -t)));

    const bool strict = std::abs(t) <= kStrictMinorantRange;
    auto beats = [&](double bound) {
      excess = std::min(excess, s / bound - 1.0);
      return strict ? s > bound : s >= bound;
    };
    minorant_ok = beats(std::exp(t)) && minorant_ok;
    if (spec.is_even()) minorant_ok = beats(std::exp(-t)) && minorant_ok;
  }
  report.add("curve.speed_closed_form", worst <= kSpeedTol, worst,
             "closed form vs |x'|");
  if (spec.is_even()) {
    report.add("curve.speed_parity", parity <= kParityTol, parity);
  }
  report.add("curve.speed_minorant", minorant_ok, excess,
             spec.is_even() ? "speed > max(e^t, e^-t)" : "speed > e^t");
}

void fd_checks(const CurveSpec& spec, const std::vector<double>& grid,
               ValidationReport& report) {
  double worst = 0.0;
  int worst_p = 0;
  for (int p = 1; p <= spec.n(); ++p) {
    const auto f = [&](double s) { return curve_derivative(spec, s, p - 1).vector(); };
    for (double t : grid) {
      const PointN exact = curve_derivative(spec, t, p);
      const PointN approx(oracle::fd_derivative(f, t));
      const double err = distance(exact, approx) / exact.norm();
      if (err > worst) {
        worst = err;
        worst_p = p;
      }
    }
  }
  report.add("curve.fd_oracle", worst <= kFdTol, worst,
             "orders 1..n, worst at p=" + std::to_string(worst_p));
}

void curvature_checks(const CurveSpec& spec, const std::vector<double>& grid,
                      ValidationReport& report) {
  double general = 0.0;
  double gram = 0.0;
  double parity = 0.0;
  double product = 0.0;
  double substitution = 0.0;
  double min_k1 = std::numeric_limits<double>::infinity();
  for (double t : grid) {
    const double closed = k1_closed(spec, t);
    const double gen = std::abs(k1_general(spec, t));
    general = std::max(general,
                       std::abs(closed - gen) / std::max(closed, 1e-300));
    min_k1 = std::min(min_k1, closed);

    const PointN d1 = curve_derivative(spec, t, 1);
    const PointN d2 = curve_derivative(spec, t, 2);
    gram = std::max(gram, rel(wedge_norm_sq(d1, d2),
                              oracle::lagrange_wedge_sq(d1.coords(), d2.coords())));

    if (spec.is_even()) parity = std::max(parity, rel(closed, k1_closed(spec, -t)));

    const double integrand = total_curvature_integrand(spec, t);
    product = std::max(product, rel(integrand, closed * speed(spec, t)));
    substitution = std::max(
        substitution,
        rel(substituted_integrand(spec, std::exp(t)) * std::exp(t), integrand));
  }
  report.add("curvature.closed_vs_general", general <= kClosedVsGeneralTol,
             general);
  report.add("curvature.gram_vs_lagrange", gram <= kGramTol, gram);
  if (spec.is_even()) {
    report.add("curvature.k1_parity", parity <= kParityTol, parity);
  }
  report.add("curvature.k1_positive", min_k1 > 0.0, min_k1);
  report.add("curvature.integrand_product", product <= kIntegrandTol, product,
             "K1 vs k1 * speed");
  report.add("curvature.substitution", substitution <= kIntegrandTol,
             substitution, "f(e^t) e^t vs K1(t)");
}

void bound_checks(const CurveSpec& spec, bool quick, ValidationReport& report) {
  const int count = quick ? 40 : 200;
  const ValidationReport pointwise =
      pointwise_bound_check(spec, log_spaced(1e-4, 1e4, count));
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& c : pointwise.checks()) margin = std::min(margin, c.residual);
  report.add("bounds.pointwise", pointwise.all_passed() && !pointwise.empty(),
             margin,
             std::to_string(pointwise.size() - pointwise.failures()) + "/" +
                 std::to_string(pointwise.size()) + " points");
}

}  // namespace

ValidationReport verification_battery(const CurveSpec& spec, bool quick) {
  ValidationReport report = verify_root_structure(spec.roots());
  const std::vector<double> grid = battery_grid(quick);
  ode_checks(spec, grid, report);
  coefficient_checks(spec, report);
  speed_checks(spec, grid, report);
  fd_checks(spec, grid, report);
  curvature_checks(spec, grid, report);
  bound_checks(spec, quick, report);
  return report;
}

}  // namespace tcurv
