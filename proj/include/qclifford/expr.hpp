#pragma once

// Parser/evaluator for multivector expressions.
//
//   literals   integers, q s l (q^k, l^k powers), e-blades (e13, e1,13 when
//              dim >= 10), and any named symbol supplied by the caller
//   operators  ~ (reversion) > _| (contraction) > ^ (wedge) > * / > + -
//
// `*` is the Clifford product; `/` divides by a scalar. All binary operators
// are left-associative. `q^2` written without spaces is a power.

#include <map>
#include <string>
#include <string_view>

#include "qclifford/clifford.hpp"
#include "qclifford/exterior.hpp"

namespace qcl {

using SymbolTable = std::map<std::string, Multivector, std::less<>>;

/// Parses the canonical text format of Multivector::to_string.
Multivector parse_multivector(std::string_view text, int dim);

/// Evaluates an expression in `alg`; unknown identifiers are looked up in
/// `symbols`. Throws ParseError (with position) or DimensionMismatch.
Multivector evaluate_expression(std::string_view text, const Algebra& alg, const SymbolTable& symbols = {});

}  // namespace qcl
