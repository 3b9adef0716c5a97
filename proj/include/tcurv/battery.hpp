#pragma once

#include "tcurv/curve.hpp"
#include "tcurv/report.hpp"

namespace tcurv {

/// The full invariant battery for one dimension: root structure, the order-n
/// ODE identity and its strictness, derivative coefficients, finite-difference
/// and Lagrange-identity oracles, closed-form vs general curvature, parity,
/// speed minorants, substitution identity and the pointwise comparison
/// bounds. `quick` thins the sample grids.
ValidationReport verification_battery(const CurveSpec& spec, bool quick = false);

}  // namespace tcurv
