// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "tcurv/analysis.hpp"
#include "tcurv/curvature.hpp"
#include "tcurv/format.hpp"
#include "tcurv/integrate.hpp"
#include "tcurv/oracle.hpp"

using namespace tcurv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
              detail.c_str());
}

// Runs one criterion, turning an unexpected exception into a FAIL line.
void criterion(int id, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(id, title, ok, detail);
}

bool exact_pi_over_two(std::string& detail) {
  const auto start = Clock::now();
  const ConvergenceVerdict v = classify(CurveSpec(2));
  const double elapsed = seconds_since(start);
  const double err = std::abs(v.total.value_or(NAN) - std::numbers::pi / 2);
  detail = "total=" + format_real(*v.total) + " |err|=" + format_real(err) +
           " time=" + format_real(elapsed) + "s";
  return v.converged() && err <= 1e-6 && elapsed < 1.0;
}

bool truncation_closed_form(std::string& detail) {
  // arctan(e^{2b}) - pi/4, evaluated independently beforehand.
  const double bs[] = {0.5, 1.0, 2.0};
  const double want[] = {0.432884741619829, 0.650880168023008, 0.767084572167367};
  double worst = 0.0;
  bool ok = true;
  for (int i = 0; i < 3; ++i) {
    const IntegralResult r = truncated_total_curvature(CurveSpec(2), 0.0, bs[i]);
    const double err = std::abs(r.value - want[i]);
    worst = std::max(worst, err);
    ok = ok && r.converged && err <= 1e-8;
  }
  detail = "max |err|=" + format_real(worst);
  return ok;
}

bool parity_sweep(std::string& detail) {
  const auto start = Clock::now();
  bool ok = true;
  for (int n = 2; n <= 8; ++n) {
    const ConvergenceVerdict v = classify(CurveSpec(n));
    const bool even = n % 2 == 0;
    bool this_ok = v.converged() && v.total_finite == even;
    if (even) {
      this_ok = this_ok && v.total && v.certified_upper_bound &&
                *v.total <= *v.certified_upper_bound;
      detail += "n=" + std::to_string(n) + ":finite(" + format_real(*v.total) + ")";
    } else {
      const DivergentWitness* w = v.witness();
      this_ok = this_ok && w && w->ladder.size() == 4;
      if (w) {
        for (const auto& r : w->ladder) {
          this_ok = this_ok && r.integral.value >= w->slope * std::abs(r.a) - 1e-6;
        }
      }
      detail += "n=" + std::to_string(n) + ":divergent";
    }
    ok = ok && this_ok;
    detail += ' ';
  }
  const double elapsed = seconds_since(start);
  detail += "time=" + format_real(elapsed) + "s";
  return ok && elapsed < 30.0;
}

bool ode_identity(std::string& detail) {
  const auto grid = standard_grid();
  double worst = 0.0;
  double weakest = INFINITY;
  for (int n = 2; n <= 10; ++n) {
    const CurveSpec spec(n);
    for (double t : grid) {
      const PointN x = curve_point(spec, t);
      worst = std::max(worst, distance(curve_derivative(spec, t, n), x) / x.norm());
    }
    for (int q = 1; q < n; ++q) {
      double dev = 0.0;
      for (double t : grid) {
        const PointN x = curve_point(spec, t);
        dev = std::max(dev, distance(curve_derivative(spec, t, q), x) / x.norm());
      }
      weakest = std::min(weakest, dev);
    }
  }
  detail = "max residual=" + format_real(worst) +
           " min lower-order deviation=" + format_real(weakest);
  return worst <= 1e-9 && weakest > 1e-6;
}

bool parity_symmetry(std::string& detail) {
  double worst_k = 0.0;
  double worst_s = 0.0;
  for (int n : {4, 6, 8}) {
    const CurveSpec spec(n);
    for (double t : standard_grid()) {
      worst_k = std::max(worst_k, std::abs(k1_closed(spec, t) - k1_closed(spec, -t)) /
                                      k1_closed(spec, t));
      worst_s = std::max(worst_s, std::abs(speed(spec, t) - speed(spec, -t)) /
                                      speed(spec, t));
    }
  }
  detail = "k1=" + format_real(worst_k) + " speed=" + format_real(worst_s);
  return worst_k <= 1e-12 && worst_s <= 1e-12;
}

bool cross_validation(std::string& detail) {
  double closed = 0.0;
  double fd = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const CurveSpec spec(n);
    for (double t : standard_grid()) {
      closed = std::max(closed, rel(k1_closed(spec, t), std::abs(k1_general(spec, t))));
      for (int p = 1; p <= n; ++p) {
        const auto f = [&](double s) { return curve_derivative(spec, s, p - 1).vector(); };
        const PointN exact = curve_derivative(spec, t, p);
        const PointN approx(oracle::fd_derivative(f, t));
        fd = std::max(fd, distance(exact, approx) / exact.norm());
      }
    }
  }
  detail = "closed vs general=" + format_real(closed) + " fd=" + format_real(fd);
  return closed <= 1e-9 && fd <= 1e-6;
}

bool pointwise_bounds(std::string& detail) {
  const auto xs = log_spaced(1e-4, 1e4, 200);
  bool ok = true;
  std::size_t checks = 0;
  for (int n = 2; n <= 7; ++n) {
    const ValidationReport rep = pointwise_bound_check(CurveSpec(n), xs);
    ok = ok && rep.all_passed() && !rep.empty();
    checks += rep.size();
  }
  // n = 3 with its constants written out.
  const CurveSpec c3(3);
  const double lower = std::sqrt(3.0) / 2;
  const double upper = std::sqrt(5.0);
  double margin = INFINITY;
  for (double x : xs) {
    const double f = substituted_integrand(c3, x);
    if (x < 1.0) margin = std::min(margin, f - lower / x);
    if (x > 1.0) margin = std::min(margin, upper / std::pow(x, 1.75) - f);
  }
  detail = std::to_string(checks) + " comparisons, n=3 explicit margin=" +
           format_real(margin);
  return ok && margin > 0.0;
}

bool infinite_length(std::string& detail) {
  bool ok = true;
  double margin = INFINITY;
  for (int n = 2; n <= 8; ++n) {
    const ValidationReport rep = infinite_length_check(CurveSpec(n), {1.0, 3.0, 5.0});
    ok = ok && rep.all_passed() && rep.size() == 6;
    for (const auto& c : rep.checks()) margin = std::min(margin, c.residual);
  }
  detail = "min margin=" + format_real(margin);
  return ok;
}

bool quadrature_soundness(std::string& detail) {
  struct Case {
    const char* name;
    std::function<double(double)> f;
    double a, b;
  };
  const CurveSpec c2(2);
  const CurveSpec c4(4);
  const Case cases[] = {
      {"exp", [](double x) { return std::exp(x); }, 0.0, 1.0},
      {"cos", [](double x) { return std::cos(x); }, 0.0, 3.0},
      {"runge", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0},
      {"K1 n=2", [&](double t) { return total_curvature_integrand(c2, t); }, -3.0, 3.0},
      {"K1 n=4", [&](double t) { return total_curvature_integrand(c4, t); }, -3.0, 3.0},
  };
  double worst = 0.0;
  bool ok = true;
  for (const auto& c : cases) {
    const IntegralResult q = adaptive_quad(c.f, c.a, c.b);
    const double ref = oracle::reference_trapezoid(c.f, c.a, c.b, 1L << 20);
    const double err = std::abs(q.value - ref);
    worst = std::max(worst, err);
    ok = ok && q.converged && err <= 1e-8;
  }
  detail = "5 integrands, max |adaptive - trapezoid|=" + format_real(worst);
  return ok;
}

}  // namespace

int main() {
  criterion(1, "n=2 total first curvature is pi/2", exact_pi_over_two);
  criterion(2, "n=2 truncations match arctan(e^2b) - pi/4", truncation_closed_form);
  criterion(3, "finite iff n even, n in 2..8", parity_sweep);
  criterion(4, "order-n ODE identity and strictness", ode_identity);
  criterion(5, "t -> -t symmetry for even n", parity_symmetry);
  criterion(6, "closed form and finite differences agree", cross_validation);
  criterion(7, "pointwise majorant and minorant", pointwise_bounds);
  criterion(8, "infinite arc length", infinite_length);
  criterion(9, "adaptive quadrature vs trapezoid reference", quadrature_soundness);
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
