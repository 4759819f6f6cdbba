#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace next {

// Predicate inventory for logical forms. Each predicate belongs to exactly
// one evaluation module and has a fixed arity.
enum class Predicate : uint8_t {
  // conjunction words
  Because,
  Separator,
  // anchors
  ArgX,  // SUBJECT
  ArgY,  // OBJECT
  Arg,   // TERM
  // primitives (leaf nodes with payload)
  Int,
  Token,
  String,
  True,
  False,
  // logical calculation
  And,
  Or,
  Not,
  Is,
  Occur,
  // deterministic functions
  Left,
  Right,
  Between,
  Within,
  NumberOf,
  // counting constraints
  AtMost,
  AtLeast,
  Direct,
  MoreThan,
  LessThan,
  Equals,
  // string matching
  Word,
  Contains,
  Link,
};

enum class ModuleClass : uint8_t {
  None,
  Logical,
  Deterministic,
  Counting,
  StringMatch,
};

ModuleClass module_class(Predicate p);
int arity(Predicate p);
std::string_view predicate_name(Predicate p);
std::optional<Predicate> predicate_from_name(std::string_view name);

constexpr int kNumPredicates = static_cast<int>(Predicate::Link) + 1;

}  // namespace next
