#pragma once

#include <stdexcept>

#include "nglie/block.hpp"
#include "nglie/weyl.hpp"
#include "nglie/witt.hpp"

namespace nglie {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Grammar (whitespace ignored between tokens):
///   element  := ['-'] term (('+'|'-') term)*
///   term     := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
///   rational := ['-'] digits ['/' digits]
///   factor   := 'x[' rational (',' rational)* ']'
///             | 't[' digits (',' digits)* ']'
///             | 'D[' digits ']' | 'P[' digits (',' digits)* ']'
///   super    := 'even{' element '}' 'odd{' element '}'
/// A bare rational denotes that multiple of the identity monomial.
AlgElem parse_alg_elem(SpecPtr spec, const std::string& text);

/// Every term must carry exactly one D[p] factor.
WittElem parse_witt_elem(WittPtr spec, const std::string& text);

/// At most one P[...] factor per term.
WeylOp parse_weyl_op(WittPtr spec, const std::string& text);

/// 'even{...} odd{...}'; empty braces denote zero.
SuperElem parse_super_elem(const SuperSpec& spec, const std::string& text);

}  // namespace nglie
