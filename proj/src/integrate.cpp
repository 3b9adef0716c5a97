#include "tcurv/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "tcurv/bounds.hpp"
#include "tcurv/curvature.hpp"

namespace tcurv {

namespace {

// Kronrod abscissae on [-1, 1] (non-negative half, descending) and weights;
// odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr long kPanelEvals = 15;

struct Partial {
  double value = 0.0;
  double error = 0.0;
  bool ok = true;
};

class Bisector {
 public:
  Bisector(const std::function<double(double)>& f, const QuadConfig& cfg)
      : f_(f), cfg_(cfg) {}

  Partial run(double a, double b, double tol, int depth) {
    const RulePair r = gauss_kronrod_15(f_, a, b);
    evals_ += kPanelEvals;
    const double err = std::abs(r.kronrod - r.gauss);
    if (!std::isfinite(r.kronrod) || !std::isfinite(err)) {
      return {r.kronrod, std::abs(r.kronrod - r.gauss), false};
    }
    if (err <= tol) return {r.kronrod, err, true};

    const double mid = a + 0.5 * (b - a);
    const bool exhausted = depth >= cfg_.max_depth ||
                           evals_ + 2 * kPanelEvals > cfg_.max_evals ||
                           !(mid > a && mid < b);
    if (exhausted) return {r.kronrod, err, false};

    const Partial left = run(a, mid, 0.5 * tol, depth + 1);
    const Partial right = run(mid, b, 0.5 * tol, depth + 1);
    return {left.value + right.value, left.error + right.error,
            left.ok && right.ok};
  }

  long evals() const { return evals_; }

 private:
  const std::function<double(double)>& f_;
  const QuadConfig& cfg_;
  long evals_ = 0;
};

double target_error(const QuadConfig& cfg, double value) {
  return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw std::invalid_argument("QuadConfig: tolerances must be positive");
  }
  if (max_depth < 10) {
    throw std::invalid_argument("QuadConfig: max_depth must be >= 10");
  }
  if (max_evals <= 0) {
    throw std::invalid_argument("QuadConfig: max_evals must be positive");
  }
}

RulePair gauss_kronrod_15(const std::function<double(double)>& f, double a,
                          double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {kronrod * half, gauss * half};
}

IntegralResult adaptive_quad(const std::function<double(double)>& f, double a,
                             double b, const QuadConfig& cfg) {
  cfg.validate();
  if (!(a < b)) {
    throw std::invalid_argument("adaptive_quad: requires a < b");
  }
  const RulePair first = gauss_kronrod_15(f, a, b);
  double tol = target_error(cfg, first.kronrod);
  long evals = kPanelEvals;

  IntegralResult result;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Bisector bisector(f, cfg);
    const Partial p = bisector.run(a, b, tol, 0);
    evals += bisector.evals();
    result = {p.value, p.error, evals, p.ok && std::isfinite(p.value)};
    const double wanted = target_error(cfg, p.value);
    if (!result.converged || p.error <= wanted) break;
    // The first panel overestimated |value|; tighten once to the final scale.
    tol = wanted;
    if (evals >= cfg.max_evals) {
      result.converged = false;
      break;
    }
  }
  if (result.converged &&
      result.error_estimate > target_error(cfg, result.value)) {
    result.converged = false;
  }
  return result;
}

IntegralResult arc_length(const CurveSpec& spec, double t0, double t1,
                          const QuadConfig& cfg) {
  if (!(t0 < t1)) throw std::invalid_argument("arc_length: requires t0 < t1");
  return adaptive_quad([&spec](double t) { return speed(spec, t); }, t0, t1,
                       cfg);
}

IntegralResult truncated_total_curvature(const CurveSpec& spec, double a,
                                         double b, const QuadConfig& cfg) {
  if (!(a < b)) {
    throw std::invalid_argument("truncated_total_curvature: requires a < b");
  }
  return adaptive_quad(
      [&spec](double t) { return total_curvature_integrand(spec, t); }, a, b,
      cfg);
}

TailIntegral positive_tail_total_curvature(const CurveSpec& spec,
                                           const QuadConfig& cfg,
                                           double tail_tol) {
  cfg.validate();
  if (!(tail_tol > 0.0)) {
    throw std::invalid_argument("tail_tol must be positive");
  }
  const BoundConstants bounds = bound_constants(spec);

  TailIntegral out;
  IntegralResult& acc = out.integral;
  bool pieces_ok = true;
  double lo = 0.0;
  double hi = 1.0;
  constexpr int kMaxRungs = 64;
  for (int rung = 0; rung < kMaxRungs; ++rung) {
    QuadConfig piece_cfg = cfg;
    piece_cfg.max_evals = std::max(1L, cfg.max_evals - acc.evals);
    const IntegralResult piece = truncated_total_curvature(spec, lo, hi, piece_cfg);
    acc.value += piece.value;
    acc.error_estimate += piece.error_estimate;
    acc.evals += piece.evals;
    pieces_ok = pieces_ok && piece.converged;
    out.cutoff = hi;
    out.tail_cap = bounds.tail_cap(hi);
    out.rungs = rung + 1;
    if (out.tail_cap < tail_tol || acc.evals >= cfg.max_evals || !pieces_ok) {
      break;
    }
    lo = hi;
    hi *= 2.0;
  }
  acc.converged = pieces_ok && out.tail_cap < tail_tol &&
                  acc.evals <= cfg.max_evals;
  acc.error_estimate += out.tail_cap;
  return out;
}

}  // namespace tcurv
