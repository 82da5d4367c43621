#pragma once

#include <string_view>

#include "freespan/poly.hpp"
#include "freespan/tspace.hpp"

namespace freespan {

/// Extended expression syntax (whitespace insignificant):
///
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ('^' positive-integer)?
///   primary := integer | var | '(' expr ')'
///            | S(d; e1, ..., ed)        symmetric sum over all d! orders
///            | comm(a; b[, n])          left-normed commutator [a, b, ..., b]
///            | frob(u, v)               (u+v)^p written as powers plus
///                                       symmetric sums
///            | w(q)                     the separating witness; q must equal
///                                       the ambient modulus
///   var     := 'x' positive-integer
Polynomial parse_expression(std::string_view text, Prime p);

/// Family syntax: "R(n=2,d=3)", "L(n=1)", or "T[ expr ; expr ; ... ]".
GeneratorFamily parse_family(std::string_view text, Prime p);

/// Slice syntax: "{x1:3, x2:3}" (also "{}").
MultiDegree parse_slice(std::string_view text);

}  // namespace freespan
