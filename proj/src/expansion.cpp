#include "expansion.hpp"

#include <cmath>

namespace tcurv::detail {

namespace {

struct Split {
  double hi;
  double lo;
};

inline Split two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

// Requires |a| >= |b| or a == 0.
inline Split fast_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline Split two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace

Expansion Expansion::product(double a, double b) {
  const Split p = two_prod(a, b);
  Expansion e;
  if (p.lo != 0.0) e.parts_.push_back(p.lo);
  if (p.hi != 0.0) e.parts_.push_back(p.hi);
  return e;
}

Expansion Expansion::dot(std::span<const double> u, std::span<const double> v) {
  Expansion acc;
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Split p = two_prod(u[i], v[i]);
    acc.grow(p.lo);
    acc.grow(p.hi);
    if (acc.parts_.size() > 16) acc.compress();
  }
  acc.compress();
  return acc;
}

void Expansion::grow(double b) {
  if (b == 0.0) return;
  std::vector<double> out;
  out.reserve(parts_.size() + 1);
  double q = b;
  for (double e : parts_) {
    const Split s = two_sum(q, e);
    q = s.hi;
    if (s.lo != 0.0) out.push_back(s.lo);
  }
  if (q != 0.0) out.push_back(q);
  parts_ = std::move(out);
}

void Expansion::compress() {
  if (parts_.size() < 2) return;
  const std::size_t len = parts_.size();
  std::vector<double> g(len);
  std::size_t bottom = len - 1;
  double q = parts_[len - 1];
  for (std::size_t i = len - 1; i-- > 0;) {
    const Split s = fast_two_sum(q, parts_[i]);
    if (s.lo != 0.0) {
      g[bottom--] = s.hi;
      q = s.lo;
    } else {
      q = s.hi;
    }
  }
  std::vector<double> out;
  out.reserve(len);
  for (std::size_t i = bottom + 1; i < len; ++i) {
    const Split s = fast_two_sum(g[i], q);
    if (s.lo != 0.0) out.push_back(s.lo);
    q = s.hi;
  }
  if (q != 0.0) out.push_back(q);
  parts_ = std::move(out);
}

Expansion Expansion::operator+(const Expansion& other) const {
  Expansion r = *this;
  for (double c : other.parts_) r.grow(c);
  r.compress();
  return r;
}

Expansion Expansion::operator-() const {
  Expansion r = *this;
  for (double& c : r.parts_) c = -c;
  return r;
}

Expansion Expansion::scaled(double b) const {
  Expansion r;
  if (parts_.empty() || b == 0.0) return r;
  Split p = two_prod(parts_[0], b);
  double q = p.hi;
  if (p.lo != 0.0) r.parts_.push_back(p.lo);
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    const Split prod = two_prod(parts_[i], b);
    const Split sum = two_sum(q, prod.lo);
    if (sum.lo != 0.0) r.parts_.push_back(sum.lo);
    const Split next = fast_two_sum(prod.hi, sum.hi);
    if (next.lo != 0.0) r.parts_.push_back(next.lo);
    q = next.hi;
  }
  if (q != 0.0) r.parts_.push_back(q);
  return r;
}

Expansion Expansion::operator*(const Expansion& other) const {
  Expansion acc;
  for (double c : other.parts_) acc = acc + scaled(c);
  return acc;
}

double Expansion::estimate() const {
  double s = 0.0;
  for (double c : parts_) s += c;
  return s;
}

}  // namespace tcurv::detail
