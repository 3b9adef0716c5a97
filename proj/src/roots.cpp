#include "tcurv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcurv/format.hpp"

namespace tcurv {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kDistinctTol = 1e-12;

// cos/sin of (pi/2) * num/den for 0 <= num/den <= 1/2.
UnitPoint half_quadrant(long num, long den) {
  if (num == 0) return {1.0, 0.0};
  if (3 * num == den) {  // 30 degrees
    return {std::numbers::sqrt3 / 2.0, 0.5};
  }
  if (2 * num == den) {  // 45 degrees
    return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};
  }
  const double angle = std::numbers::pi / 2.0 * static_cast<double>(num) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

UnitPoint unit_root(long k, long n) {
  if (n <= 0) throw std::invalid_argument("unit_root: n must be positive");
  k %= n;
  if (k < 0) k += n;
  // 2 pi k / n = (pi / 2) * (quadrant + rem / n)
  const long quarter_turns = 4 * k;
  const long quadrant = quarter_turns / n;
  const long rem = quarter_turns % n;

  UnitPoint base;
  if (2 * rem <= n) {
    base = half_quadrant(rem, n);
  } else {
    const UnitPoint c = half_quadrant(n - rem, n);
    base = {c.sin, c.cos};
  }
  switch (quadrant) {
    case 0: return base;
    case 1: return {-base.sin, base.cos};
    case 2: return {-base.cos, -base.sin};
    default: return {base.sin, -base.cos};
  }
}

int expected_pair_count(int n) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  if (n == 2) return 0;
  return n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
}

RootSet characteristic_roots(int n) {
  if (n < 2) {
    throw std::invalid_argument("characteristic_roots: n must be >= 2, got " +
                                std::to_string(n));
  }
  RootSet rs;
  rs.n = n;
  // k in [1, (n-1)/2] gives beta > 0 and skips k = 0 and 2k = n exactly.
  for (long k = 1; 2 * k < n; ++k) {
    const UnitPoint p = unit_root(k, n);
    rs.pairs.push_back({0, p.cos, p.sin});
  }
  std::sort(rs.pairs.begin(), rs.pairs.end(),
            [](const RootPair& a, const RootPair& b) {
              if (a.alpha != b.alpha) return a.alpha > b.alpha;
              return a.beta > b.beta;
            });
  for (std::size_t i = 0; i < rs.pairs.size(); ++i) {
    rs.pairs[i].index = static_cast<int>(i) + 1;
  }
  return rs;
}

ValidationReport verify_root_structure(const RootSet& rs) {
  ValidationReport report;
  const int m = rs.m();

  double count_residual = 0.0;
  bool count_ok = false;
  if (rs.n >= 2) {
    count_residual = std::abs(m - expected_pair_count(rs.n));
    count_ok = count_residual == 0.0;
  }
  report.add("roots.pair_count", count_ok, count_residual,
             "m=" + std::to_string(m));

  double unit = 0.0;
  bool range_ok = true;
  double range_residual = 0.0;
  bool beta_ok = true;
  double beta_min = m > 0 ? rs.pairs.front().beta : 0.0;
  for (const auto& p : rs.pairs) {
    unit = std::max(unit, std::abs(p.alpha * p.alpha + p.beta * p.beta - 1.0));
    if (!(p.alpha > -1.0 && p.alpha < 1.0)) {
      range_ok = false;
      range_residual = std::max(range_residual, std::abs(p.alpha) - 1.0);
    }
    if (!(p.beta > 0.0)) beta_ok = false;
    beta_min = std::min(beta_min, p.beta);
  }
  report.add("roots.unit_modulus", unit <= kUnitTol, unit);
  report.add("roots.alpha_range", range_ok, range_residual);
  report.add("roots.beta_positive", beta_ok, beta_min);

  double min_gap = m > 1 ? rs.pairs[0].alpha - rs.pairs[1].alpha : 0.0;
  bool sorted = true;
  for (int i = 0; i + 1 < m; ++i) {
    const double gap = rs.pairs[i].alpha - rs.pairs[i + 1].alpha;
    min_gap = std::min(min_gap, gap);
    if (!(gap > kDistinctTol)) sorted = false;
  }
  report.add("roots.sorted_strict", sorted, min_gap);

  // Sum of all n-th roots of unity, real part: 2 sum alpha + real roots.
  double real_sum = 1.0 + (rs.n % 2 == 0 ? -1.0 : 0.0);
  for (const auto& p : rs.pairs) real_sum += 2.0 * p.alpha;
  report.add("roots.sum_zero", std::abs(real_sum) <= 1e-10,
             std::abs(real_sum));

  if (rs.n % 2 == 1 && m > 0) {
    const double last = rs.pairs.back().alpha;
    report.add("roots.odd_last_alpha_bound", last > -1.0 && last <= -0.5,
               last + 0.5, "alpha_m=" + format_real(last));
    double max_abs = 0.0;
    for (const auto& p : rs.pairs) max_abs = std::max(max_abs, std::abs(p.alpha));
    report.add("roots.odd_last_alpha_dominant", std::abs(last) >= max_abs,
               max_abs - std::abs(last));
  } else if (rs.n % 2 == 0 && m > 0) {
    double worst = 0.0;
    bool has_zero = false;
    for (int j = 0; j < m; ++j) {
      worst = std::max(worst, std::abs(rs.pairs[j].alpha +
                                       rs.pairs[m - 1 - j].alpha));
      if (std::abs(rs.pairs[j].alpha) <= kUnitTol) has_zero = true;
    }
    report.add("roots.even_negation_symmetry", worst <= kUnitTol, worst);
    report.add("roots.even_zero_iff_m_odd", has_zero == (m % 2 == 1),
               has_zero ? 1.0 : 0.0, "m=" + std::to_string(m));
  }
  return report;
}

std::string format_root_table(const RootSet& rs) {
  std::string out;
  for (const auto& p : rs.pairs) {
    out += std::to_string(p.index);
    out += ' ';
    out += format_real(p.alpha);
    out += ' ';
    out += format_real(p.beta);
    out += '\n';
  }
  return out;
}

}  // namespace tcurv
