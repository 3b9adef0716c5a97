#pragma once

#include <string>
#include <vector>

#include "tcurv/report.hpp"

namespace tcurv {

/// A conjugate pair alpha +/- beta*i of non-real n-th roots of unity. Only the
/// beta > 0 member is stored.
struct RootPair {
  int index = 0;  // 1-based rank after sorting by alpha, descending
  double alpha = 0.0;
  double beta = 0.0;
};

/// The non-real roots of lambda^n = 1, sorted by alpha descending.
struct RootSet {
  int n = 0;
  std::vector<RootPair> pairs;

  int m() const { return static_cast<int>(pairs.size()); }
};

/// Number of conjugate pairs for dimension n: 0 for n = 2, (n-1)/2 for odd n,
/// (n-2)/2 for even n >= 4.
int expected_pair_count(int n);

/// cos and sin of 2*pi*k/n, computed with integer octant reduction. Angles
/// that are multiples of 30 or 45 degrees come from an exact table, so e.g.
/// k/n = 1/3 yields cos = -0.5 exactly.
struct UnitPoint {
  double cos;
  double sin;
};
UnitPoint unit_root(long k, long n);

/// Non-real n-th roots of unity, one RootPair per conjugate pair. Throws
/// std::invalid_argument for n < 2.
RootSet characteristic_roots(int n);

/// One check per RootSet invariant with its residual. Never throws.
ValidationReport verify_root_structure(const RootSet& roots);

/// "k alpha beta" lines, 17 significant digits.
std::string format_root_table(const RootSet& roots);

}  // namespace tcurv
