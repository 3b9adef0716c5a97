#pragma once

#include <span>
#include <string>

namespace tcurv {

/// Shortest-safe round-trip text for a double: 17 significant digits,
/// '.' decimal separator regardless of the global locale.
std::string format_real(double value);

/// Comma-joined `format_real` values, no trailing newline.
std::string format_csv_row(std::span<const double> values);

}  // namespace tcurv
