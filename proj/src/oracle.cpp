#include "tcurv/oracle.hpp"

#include <stdexcept>

namespace tcurv::oracle {

void FDConfig::validate() const {
  if (!(h > 1e-9 && h < 1e-2)) {
    throw std::invalid_argument("FDConfig: h must lie in (1e-9, 1e-2)");
  }
  if (richardson_levels < 0) {
    throw std::invalid_argument("FDConfig: richardson_levels must be >= 0");
  }
}

std::vector<double> fd_derivative(
    const std::function<std::vector<double>(double)>& f, double t,
    const FDConfig& cfg) {
  cfg.validate();
  const int levels = cfg.richardson_levels;
  // tableau[i] holds the level-i central differences, refined in place.
  std::vector<std::vector<double>> tableau;
  double h = cfg.h;
  for (int i = 0; i <= levels; ++i, h *= 0.5) {
    const auto hi = f(t + h);
    const auto lo = f(t - h);
    if (hi.size() != lo.size()) {
      throw std::invalid_argument("fd_derivative: inconsistent output size");
    }
    std::vector<double> d(hi.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = (hi[k] - lo[k]) / (2 * h);
    tableau.push_back(std::move(d));
  }
  // Neville-style elimination of the h^2, h^4, ... error terms.
  double factor = 4.0;
  for (int j = 1; j <= levels; ++j, factor *= 4.0) {
    for (int i = levels; i >= j; --i) {
      for (std::size_t k = 0; k < tableau[i].size(); ++k) {
        tableau[i][k] += (tableau[i][k] - tableau[i - 1][k]) / (factor - 1.0);
      }
    }
  }
  return tableau[levels];
}

double fd_derivative(const std::function<double(double)>& f, double t,
                     const FDConfig& cfg) {
  return fd_derivative(
      [&f](double s) { return std::vector<double>{f(s)}; }, t, cfg)[0];
}

double reference_trapezoid(const std::function<double(double)>& f, double a,
                           double b, long panels) {
  if (!(a < b)) throw std::invalid_argument("reference_trapezoid: a < b");
  if (panels < 1) throw std::invalid_argument("reference_trapezoid: panels >= 1");
  const double h = (b - a) / static_cast<double>(panels);
  double interior = 0.0;
  for (long i = 1; i < panels; ++i) interior += f(a + h * static_cast<double>(i));
  return h * (0.5 * (f(a) + f(b)) + interior);
}

double lagrange_wedge_sq(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("lagrange_wedge_sq: dimension mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const double minor = u[i] * v[j] - u[j] * v[i];
      sum += minor * minor;
    }
  }
  return sum;
}

}  // namespace tcurv::oracle
