#pragma once

#include <string>

#include "xdm/survival_model.hpp"

namespace xdm {

// Arithmetic in the variable mu: + - * / and right-associative ^,
// parentheses, exp, log, sqrt, and decimal literals. Unary minus binds
// looser than ^, so -mu^2 reads as -(mu^2).
RealFn parse_slope_expression(const std::string& text);

// A double literal, or one of inf, +inf, -inf.
double parse_extended_real(const std::string& text);

}  // namespace xdm
