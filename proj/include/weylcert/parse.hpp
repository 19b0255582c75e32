#pragma once

#include <string_view>
#include <vector>

#include "weylcert/hyperplane.hpp"
#include "weylcert/rootsys.hpp"
#include "weylcert/weight.hpp"

namespace weylcert {

/// "1/2,1/2,1/2" (e-coordinates) or "fw:0,0,1" (fundamental-weight coefficients).
/// Throws ParseError with the offending character offset.
Weight parse_weight(const RootSystem& rs, std::string_view text);

/// Weights separated by ';'.
std::vector<Weight> parse_weight_list(const RootSystem& rs, std::string_view text);

/// "normal:1,-1,0,0" or "span:<weight>;<weight>;...".
Hyperplane parse_hyperplane(const RootSystem& rs, std::string_view text);

}  // namespace weylcert
