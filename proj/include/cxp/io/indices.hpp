#pragma once

#include <string_view>

#include "cxp/coxeter.hpp"
#include "cxp/orbit.hpp"

namespace cxp::io {

/// One index: a product of factors joined by '*', each a decimal literal or
/// one of `tau`, `sigma`, `sqrt2`. Throws InvalidIndices on anything else.
double parse_index_expression(std::string_view text);

/// "A1,A2,A3" -> validated indices. Throws InvalidIndices.
WeightIndices parse_indices(std::string_view text, Diagram group, bool sigma_scale);

}  // namespace cxp::io
