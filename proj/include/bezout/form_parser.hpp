#pragma once

#include <optional>
#include <string>

#include "bezout/binary_form.hpp"

namespace bezout {

// Parses an expression in x0, x1 with integer/rational coefficients into a
// dense form. Grammar:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' uint]
//   primary := uint ['/' uint] | 'x0' | 'x1' | '(' expr ')'
//
// The result must be homogeneous; expectedOrder (when given) pins the order,
// which is how a bare "0" acquires one.
BinaryForm parse_form(const std::string& text, std::optional<int> expected_order = std::nullopt);

} // namespace bezout
