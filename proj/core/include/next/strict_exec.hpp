#pragma once

#include "next/ast.hpp"
#include "next/instance.hpp"

namespace next {

// Binary execution under exact keyword matching and strict position/count
// constraints. Pure and deterministic. Positional semantics are spelled out
// in docs/logical_forms.md; the soft executor implements the same
// definitions independently.
//
// Throws AnchorMissing if the form references an anchor role the instance
// lacks, std::logic_error on ill-typed trees (callers validate first).
int exec_strict(const LogicalForm& form, const Instance& x);
int exec_strict(const Node& root, const Instance& x);

}  // namespace next
