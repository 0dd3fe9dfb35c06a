#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoforge/core.hpp"

namespace monoforge {

// A parsed two-term expression, bound to a concrete variable order.
// rho is the coefficient in the normal form x^A - rho x^B, stored as a
// reduced rational literal ("1", "-2", "3/4", ...).
struct ParsedBinomial {
    std::vector<std::string> variables;
    ExponentVector A_raw;
    ExponentVector B_raw;
    std::string rho = "1";

    bool operator==(const ParsedBinomial&) const = default;
};

// Grammar:
//   expr   := term ('+'|'-') term
//   term   := [coeff '*'] factor ('*' factor)*
//   factor := ident ['^' uint]      (uint >= 1; repeats multiply)
//   coeff  := ['-'] uint ['/' uint] (nonzero)
// Names of the shape x<k> are pinned to slot k-1 and the slot count is the
// largest k mentioned; any other names are slotted in order of first
// appearance. The two styles cannot be mixed unless `variable_order`
// supplies the slot layout explicitly; when given, it must cover every
// name that occurs.
ParsedBinomial parse(const std::string& text,
                     const std::optional<std::vector<std::string>>& variable_order = {});

// Parses several expressions over one shared variable layout (the union of
// their names, same binding rules as above).
std::vector<ParsedBinomial> parse_all(
    const std::vector<std::string>& texts,
    const std::optional<std::vector<std::string>>& variable_order = {});

// Canonical text form; render(parse(t)) reparses to the same ParsedBinomial.
std::string render(const ParsedBinomial& b);

}  // namespace monoforge
