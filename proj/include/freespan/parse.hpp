#pragma once

#include <string>
#include <string_view>

#include "freespan/poly.hpp"

namespace freespan {

/// Parses the plain polynomial syntax:
///
///   poly   := term (('+'|'-') term)*
///   term   := (integer '*')? factor ('*' factor)* | integer
///   factor := var ('^' positive-integer)?
///   var    := 'x' positive-integer
///
/// Whitespace is insignificant.  '-' is folded into the coefficient of the
/// following term.  Examples: "x1*x2 - x2*x1", "2*x1^3 + 1", "0".
Polynomial parse(std::string_view text, Prime p);

/// Canonical text form: terms in ascending deg-lex order joined by " + ",
/// coefficients reduced into [1, p) and omitted when equal to 1 (unless the
/// term is the empty word), letters spelled out one by one ("x1*x2*x2", not
/// "x1*x2^2").  The zero polynomial prints as "0".  `parse(format(f)) == f`.
std::string format(const Polynomial& f);

/// "x1*x2" for words, "1" for the empty word.
std::string format(const Word& w);

}  // namespace freespan
