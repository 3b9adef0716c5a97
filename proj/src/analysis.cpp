#include "tcurv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "tcurv/curvature.hpp"
#include "tcurv/format.hpp"

namespace tcurv {

namespace {

std::string x_label(double x) { return "x=" + format_real(x); }

IntegralResult add(const IntegralResult& a, const IntegralResult& b) {
  return {a.value + b.value, a.error_estimate + b.error_estimate,
          a.evals + b.evals, a.converged && b.converged};
}

}  // namespace

bool ConvergenceVerdict::converged() const {
  if (!positive_tail.integral.converged) return false;
  if (const auto* w = witness()) {
    return std::all_of(w->ladder.begin(), w->ladder.end(),
                       [](const LadderRung& r) { return r.integral.converged; });
  }
  return std::get<IntegralResult>(negative_tail).converged;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("log_spaced: requires 0 < lo < hi, count >= 2");
  }
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  const double l0 = std::log(lo);
  const double step = (std::log(hi) - l0) / (count - 1);
  for (int i = 0; i < count; ++i) {
    xs.push_back(i == count - 1 ? hi : std::exp(l0 + step * i));
  }
  xs.front() = lo;
  return xs;
}

ValidationReport pointwise_bound_check(const CurveSpec& spec,
                                       const std::vector<double>& xs) {
  const BoundConstants bc = bound_constants(spec);
  const bool two = spec.curve_case() == CurveCase::Two;
  ValidationReport report;
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      report.add("bounds.domain " + x_label(x), false, x,
                 "x must be positive and finite");
      continue;
    }
    const double value = substituted_integrand(spec, x);
    if (x > 1.0 || (two && x == 1.0)) {
      const double bound = bc.majorant(x);
      const double margin = bound - value;
      report.add("bounds.majorant " + x_label(x), margin > 0.0, margin,
                 "integrand=" + format_real(value) +
                     " majorant=" + format_real(bound));
    } else if (x < 1.0 && bc.minorant_const) {
      const double bound = *bc.minorant_const / x;
      const double margin = value - bound;
      report.add("bounds.minorant " + x_label(x), margin > 0.0, margin,
                 "integrand=" + format_real(value) +
                     " minorant=" + format_real(bound));
    }
  }
  return report;
}

ConvergenceVerdict classify(const CurveSpec& spec, const QuadConfig& cfg,
                            const ClassifyOptions& options) {
  if (spec.n() > options.max_dimension) {
    throw std::invalid_argument(
        "classify: n = " + std::to_string(spec.n()) +
        " exceeds the configured maximum dimension " +
        std::to_string(options.max_dimension));
  }
  ConvergenceVerdict v;
  v.n = spec.n();
  v.bounds = bound_constants(spec);
  v.positive_tail = positive_tail_total_curvature(spec, cfg, options.tail_tol);

  const IntegralResult& pos = v.positive_tail.integral;
  if (pos.value > v.bounds.majorant_integral() + pos.error_estimate) {
    throw InternalConsistencyError(
        "positive tail " + format_real(pos.value) +
        " exceeds the majorant integral " +
        format_real(v.bounds.majorant_integral()));
  }

  if (spec.is_even()) {
    v.total_finite = true;
    v.negative_tail = pos;  // t -> -t symmetry
    v.total = 2.0 * pos.value;
    v.certified_upper_bound = 2.0 * v.bounds.majorant_integral();
    return v;
  }

  v.total_finite = false;
  DivergentWitness w;
  w.slope = *v.bounds.minorant_const;

  std::vector<double> rungs = options.ladder;
  std::sort(rungs.begin(), rungs.end(), std::greater<>());
  if (rungs.empty() || rungs.front() >= 0.0) {
    throw std::invalid_argument("classify: ladder points must be negative");
  }
  IntegralResult acc{0.0, 0.0, 0, true};
  double upper = 0.0;
  for (double a : rungs) {
    if (a == upper) continue;
    acc = add(acc, truncated_total_curvature(spec, a, upper, cfg));
    LadderRung rung{a, acc, w.slope * std::abs(a)};
    if (acc.value < rung.minorant - acc.error_estimate) {
      throw InternalConsistencyError(
          "ladder rung a=" + format_real(a) + " integral " +
          format_real(acc.value) + " below minorant " +
          format_real(rung.minorant));
    }
    if (!w.ladder.empty()) {
      const LadderRung& prev = w.ladder.back();
      const double growth = acc.value - prev.integral.value;
      const double expected = w.slope * (std::abs(a) - std::abs(prev.a));
      if (growth < expected - acc.error_estimate - prev.integral.error_estimate) {
        throw InternalConsistencyError(
            "ladder growth " + format_real(growth) + " between a=" +
            format_real(prev.a) + " and a=" + format_real(a) +
            " below minorant growth " + format_real(expected));
      }
    }
    w.ladder.push_back(rung);
    upper = a;
  }
  v.negative_tail = std::move(w);
  return v;
}

ValidationReport infinite_length_check(const CurveSpec& spec,
                                       const std::vector<double>& bs,
                                       const QuadConfig& cfg) {
  ValidationReport report;
  const double alpha_m =
      spec.is_even() ? -1.0 : std::abs(spec.roots().pairs.back().alpha);
  for (double b : bs) {
    const std::string tag = "b=" + format_real(b);
    if (!(b >= 0.0) || !std::isfinite(b)) {
      report.add("length.domain " + tag, false, b, "b must be >= 0");
      continue;
    }
    if (b == 0.0) {
      report.add("length.positive " + tag, true, 0.0, "empty interval");
      report.add("length.negative " + tag, true, 0.0, "empty interval");
      continue;
    }
    const IntegralResult pos = arc_length(spec, 0.0, b, cfg);
    const double pos_bound = std::expm1(b);
    report.add("length.positive " + tag,
               pos.converged && pos.value >= pos_bound, pos.value - pos_bound,
               "length=" + format_real(pos.value) +
                   " minorant=" + format_real(pos_bound));

    const IntegralResult neg = arc_length(spec, -b, 0.0, cfg);
    const double neg_bound =
        spec.is_even() ? std::expm1(b) : std::expm1(b * alpha_m) / alpha_m;
    report.add("length.negative " + tag,
               neg.converged && neg.value >= neg_bound, neg.value - neg_bound,
               "length=" + format_real(neg.value) +
                   " minorant=" + format_real(neg_bound));
  }
  return report;
}

std::string to_key_values(const ConvergenceVerdict& v) {
  std::ostringstream out;
  const auto& bc = v.bounds;
  const auto& pos = v.positive_tail;
  out << "n=" << v.n << '\n';
  out << "epsilon=" << format_real(bc.epsilon) << '\n';
  out << "delta=" << format_real(bc.delta) << '\n';
  out << "majorant_const=" << format_real(bc.majorant_const) << '\n';
  out << "majorant_exponent=" << format_real(bc.majorant_exponent()) << '\n';
  if (bc.minorant_const) {
    out << "minorant_const=" << format_real(*bc.minorant_const) << '\n';
  }
  out << "total_finite=" << (v.total_finite ? "true" : "false") << '\n';
  out << "positive_tail=" << format_real(pos.integral.value) << '\n';
  out << "positive_tail_error=" << format_real(pos.integral.error_estimate)
      << '\n';
  out << "positive_tail_cutoff=" << format_real(pos.cutoff) << '\n';
  out << "positive_tail_cap=" << format_real(pos.tail_cap) << '\n';
  out << "positive_tail_evals=" << pos.integral.evals << '\n';
  out << "positive_tail_converged="
      << (pos.integral.converged ? "true" : "false") << '\n';
  if (const auto* w = v.witness()) {
    out << "negative_tail=divergent\n";
    out << "divergence_slope=" << format_real(w->slope) << '\n';
    out << "ladder_rungs=" << w->ladder.size() << '\n';
    for (std::size_t i = 0; i < w->ladder.size(); ++i) {
      const auto& r = w->ladder[i];
      const std::string key = "ladder." + std::to_string(i) + '.';
      out << key << "a=" << format_real(r.a) << '\n';
      out << key << "integral=" << format_real(r.integral.value) << '\n';
      out << key << "error=" << format_real(r.integral.error_estimate) << '\n';
      out << key << "minorant=" << format_real(r.minorant) << '\n';
    }
  } else {
    out << "negative_tail=finite\n";
  }
  if (v.total) out << "total=" << format_real(*v.total) << '\n';
  if (v.certified_upper_bound) {
    out << "certified_upper_bound=" << format_real(*v.certified_upper_bound)
        << '\n';
  }
  out << "converged=" << (v.converged() ? "true" : "false") << '\n';
  return out.str();
}

std::string to_text(const ConvergenceVerdict& v) {
  std::ostringstream out;
  const auto& bc = v.bounds;
  const auto& pos = v.positive_tail;
  out << "total first curvature, n = " << v.n << '\n';
  out << "  epsilon         " << format_real(bc.epsilon) << '\n';
  out << "  delta           " << format_real(bc.delta) << '\n';
  out << "  majorant        " << format_real(bc.majorant_const) << " / x^"
      << format_real(bc.majorant_exponent()) << "  (x > 1)\n";
  if (bc.minorant_const) {
    out << "  minorant        " << format_real(*bc.minorant_const)
        << " / x  (0 < x < 1)\n";
  }
  out << "  positive tail   " << format_real(pos.integral.value)
      << "  error <= " << format_real(pos.integral.error_estimate)
      << "  cutoff t = " << format_real(pos.cutoff)
      << "  tail cap " << format_real(pos.tail_cap) << '\n';
  if (const auto* w = v.witness()) {
    out << "  negative tail   divergent, integral over [a, 0] >= "
        << format_real(w->slope) << " |a|\n";
    out << "      " << std::left << std::setw(8) << "a" << std::setw(24)
        << "integral" << "minorant\n";
    for (const auto& r : w->ladder) {
      out << "      " << std::setw(8) << format_real(r.a) << std::setw(24)
          << format_real(r.integral.value) << format_real(r.minorant) << '\n';
    }
    out << std::right;
    out << "  verdict         infinite total first curvature\n";
  } else {
    out << "  negative tail   finite (mirror of the positive tail)\n";
    out << "  total           " << format_real(*v.total) << '\n';
    out << "  certified bound " << format_real(*v.certified_upper_bound)
        << '\n';
    out << "  verdict         finite total first curvature\n";
  }
  return out.str();
}

}  // namespace tcurv
