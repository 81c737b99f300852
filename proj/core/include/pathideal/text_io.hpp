#pragma once

#include "pathideal/monomial.hpp"

#include <string>
#include <string_view>

namespace pathideal {

/// `x1^2*x3`; exponent 1 and absent variables omitted; `1` for the unit.
std::string to_text(const Monomial& m);

/// Inverse of to_text. Also accepts whitespace around factors and repeated
/// variables (`x1*x1` is x1^2).
Monomial parse_monomial(std::string_view text, std::size_t ambient);

/// `(g1, g2, ...)` with generators in canonical order; `(0)` for the zero ideal.
std::string to_text(const MonomialIdeal& ideal);

/// Comma-separated generator list, e.g. "x1*x2, x2*x3".
MonomialIdeal parse_ideal(std::string_view text, std::size_t ambient);

} // namespace pathideal
