#ifndef MZETA_EXPR_HPP
#define MZETA_EXPR_HPP

#include <string>

#include "mzeta/ring.hpp"
#include "mzeta/series.hpp"

namespace mzeta {

/// Parse the expression grammar: integer literals, `L`, `mu(<positive int>)`,
/// `W<identifier>`, operators + - * ^ (tightest first: ^, *, then + -),
/// parentheses, unary minus, insignificant whitespace. Exponents may be
/// negative where the base is invertible (L and unit monomials).
/// Throws ParseError with the offending character offset.
RingElem parse_ring_elem(const std::string& text);

/// Parse the canonical series form produced by format_series: terms joined
/// with + or -, each a coefficient expression times zero or more factors
/// `A(nu,m)/(1-A(nu,m))`.
RationalSeries parse_series(const std::string& text);

/// Canonical, bit-stable rendering; parse_series(format_series(z)) == z.
std::string format_series(const RationalSeries& z);

} // namespace mzeta

#endif
