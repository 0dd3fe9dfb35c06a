#pragma once

#include <string>
#include <vector>

#include "monoforge/core.hpp"

namespace monoforge {

std::string monomial_text(const ExponentVector& v, const std::vector<std::string>& vars);

// Total transform in factored form, e.g. "x^2*y^3*(y - x)" or "y^2*(1 - x^3*y)".
// The exceptional monomial prefix is dropped when C = 0; the coefficient tag
// is shown only when it is not 1.
std::string total_transform_text(const BinomialState& s, const std::vector<std::string>& vars);

std::vector<std::string> default_variables(int n);

}  // namespace monoforge
