#pragma once

#include <string>
#include <string_view>

#include "wick/rational_function.hpp"
#include "wick/series.hpp"

namespace wick {

/// Parses the coefficient grammar: variables z1..zn and w1..wn, the
/// imaginary unit `i`, integer literals, `+ - * /`, `^` with a non-negative
/// integer exponent, and parentheses. The deformation parameter is not part
/// of the grammar. Errors are InputError with the offending column.
RationalFunction parse_expression(std::string_view text, int dimension);

/// Renders a series with the deformation parameter written as `v`,
/// e.g. `z1^2*w1^2 + 4*z1*w1*v + 2*v^2`.
std::string to_string(const Series<RationalFunction>& s);

inline std::string to_string(const RationalFunction& f) { return f.to_string(); }

}  // namespace wick
