#pragma once

#include <span>
#include <vector>

namespace tcurv::detail {

// Exact floating-point expansion: the represented value is the exact sum of
// the components, which are nonoverlapping and sorted by increasing
// magnitude (Shewchuk's arithmetic, with fma for the product error term).
// Exact as long as no partial product under- or overflows.
class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(double x) {
    if (x != 0.0) parts_.push_back(x);
  }

  static Expansion product(double a, double b);
  static Expansion dot(std::span<const double> u, std::span<const double> v);

  Expansion operator+(const Expansion& other) const;
  Expansion operator-() const;
  Expansion operator-(const Expansion& other) const { return *this + (-other); }
  Expansion operator*(const Expansion& other) const;
  Expansion scaled(double b) const;

  // Correctly ordered approximation of the exact value.
  double estimate() const;
  std::size_t size() const { return parts_.size(); }

 private:
  void grow(double b);
  void compress();

  std::vector<double> parts_;
};

}  // namespace tcurv::detail
