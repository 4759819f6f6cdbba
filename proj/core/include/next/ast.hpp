#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "next/predicates.hpp"

namespace next {

// Value types of expression nodes. Every well-typed tree roots at Bool.
//
//   Bool    truth-valued clause
//   IntVal  integer (literals, NumberOf)
//   Str     string literal (String / Token leaves)
//   Anchor  reference to an anchor role (ArgX / ArgY / Arg)
//   Query   keyword query scored over the sentence (Word, Link)
//   Range   positional region relative to located references
enum class ValueType : uint8_t { Bool, IntVal, Str, Anchor, Query, Range };

std::string_view value_type_name(ValueType t);

// Expression node. Freely constructible, including ill-typed shapes;
// validate() reports problems, executors require a validated tree.
struct Node {
  Predicate pred = Predicate::True;
  std::vector<Node> children;
  std::string str_value;  // payload for String / Token
  long int_value = 0;     // payload for Int

  bool operator==(const Node& other) const;
};

// Leaf / builder helpers.
Node lit_int(long v);
Node lit_string(std::string s);
Node lit_token(std::string s);
Node make_node(Predicate p, std::vector<Node> children = {});

struct TypeIssue {
  std::string path;  // e.g. "root.0.1", child indices from the root
  std::string message;
};

struct ValidationResult {
  std::vector<TypeIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Arity / typing check for a full tree; the root must type as Bool.
ValidationResult validate(const Node& root);

// Type of a node assuming its children are well-typed. Reports issues for
// this node only; used internally by validate().
ValidationResult validate_at(const Node& node, const std::string& path,
                             ValueType& out_type);

// Inserts implicit Word wrappers where a Str literal meets a slot that
// expects a Query (keyword arguments of Is/Occur/Contains/Link and the
// reference arguments of the positional predicates). Returns the rewritten
// tree; no-op on already well-typed input.
Node coerce_tree(const Node& root);

// True if the tree contains at least one StringMatch- or Deterministic-class
// predicate, i.e. it asserts something about the sentence.
bool is_grounded(const Node& root);

// An executable labeling function: a validated Bool tree plus the label it
// assigns when it matches.
struct LogicalForm {
  std::string id;
  Node root;
  std::string label;
};

}  // namespace next
