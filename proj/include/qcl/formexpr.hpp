// formexpr.hpp — the human-readable expression grammar for degree-2 forms.
//
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := [coef '*'?] var ('*' var | '^2')
//   var   := 'x0' | 'x1' | 'x2' | 'x3'
//   coef  := integer | 'a'-polynomial, e.g. (a+2) or (2a+1), or bare 'a'
//
// Whitespace is ignored. Integers reduce modulo the characteristic; 'a' is
// the residue class of x under the field modulus (extension fields only).
#pragma once

#include <stdexcept>
#include <string>

#include "qcl/quadrics.hpp"

namespace qcl {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

Form4 parse_form(const std::string& text, const FieldSpec& F);

// fixed-point of parse_form: parse(serialize(f)) == f for nonzero forms
std::string serialize_form(const FieldSpec& F, const Form4& f);

}  // namespace qcl
