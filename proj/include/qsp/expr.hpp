#pragma once

#include <string_view>

#include "qsp/qalgebra.hpp"

namespace qsp {

/// Parses `E1`, `F2`, `K1^-1`, root vectors `E[k]`, `F[k]` (1-based), the
/// scalar variable `v`, rationals, `*`, `+`, `-`, `^` and parentheses into
/// the normal form of U. Throws ParseError.
AlgebraElement parse_expression(const QuantumAlgebra& U, std::string_view text);

}  // namespace qsp
