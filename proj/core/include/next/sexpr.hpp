#pragma once

#include <stdexcept>
#include <string>

#include "next/ast.hpp"

namespace next {

// Canonical textual form of logical-form trees (grammar in
// docs/logical_forms.md):
//
//   node   := SYMBOL | INT | STRING | '(' SYMBOL node* ')'
//
// Nullary predicates print bare (True, ArgX), Int literals print as bare
// integers, String literals as double-quoted strings with \" and \\ escapes,
// Token literals as (Token "..."). print/parse round-trip exactly.

struct SexprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string print_sexpr(const Node& node);

// Parses one node; the whole input must be consumed. Str literals in Query
// slots are wrapped via coerce_tree(); the result is NOT validated.
Node parse_sexpr(const std::string& text);

}  // namespace next
