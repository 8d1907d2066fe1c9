#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "advpos/region.hpp"

namespace advpos {

/// 17-significant-digit serialization; round-trips doubles bit-exactly.
/// Infinity becomes the literal "inf" (the nu_L marker never reaches CSV as a
/// floating-point infinity).
std::string format_double17(double v);

/// Inverse of format_double17 (accepts "inf" / "-inf").
double parse_double17(std::string_view s);

/// Region scan schema: header `scheme,m,theta,nu,min_entry,nonneg`.
std::string region_csv(const std::vector<RegionSample>& samples);
std::vector<RegionSample> parse_region_csv(std::string_view text);

/// Boundary schema: header `k,theta,nu_R,nu_L`.
std::string boundary_csv(const std::vector<BoundaryCurve>& curves);
std::vector<BoundaryCurve> parse_boundary_csv(std::string_view text);

/// Grid flag "a:b:n" (linear) or "a:b:n:log" (geometric).
std::vector<double> parse_grid(std::string_view spec);

}  // namespace advpos
