#include "next/ast.hpp"

#include <sstream>

namespace next {

std::string_view value_type_name(ValueType t) {
  switch (t) {
    case ValueType::Bool: return "Bool";
    case ValueType::IntVal: return "Int";
    case ValueType::Str: return "Str";
    case ValueType::Anchor: return "Anchor";
    case ValueType::Query: return "Query";
    case ValueType::Range: return "Range";
  }
  return "?";
}

bool Node::operator==(const Node& other) const {
  return pred == other.pred && str_value == other.str_value &&
         int_value == other.int_value && children == other.children;
}

Node lit_int(long v) {
  Node n;
  n.pred = Predicate::Int;
  n.int_value = v;
  return n;
}

Node lit_string(std::string s) {
  Node n;
  n.pred = Predicate::String;
  n.str_value = std::move(s);
  return n;
}

Node lit_token(std::string s) {
  Node n;
  n.pred = Predicate::Token;
  n.str_value = std::move(s);
  return n;
}

Node make_node(Predicate p, std::vector<Node> children) {
  Node n;
  n.pred = p;
  n.children = std::move(children);
  return n;
}

namespace {

bool is_locatable(ValueType t) {
  return t == ValueType::Anchor || t == ValueType::Query;
}

void issue(ValidationResult& r, const std::string& path, std::string msg) {
  r.issues.push_back({path, std::move(msg)});
}

std::string type_err(Predicate p, int slot, std::string_view wanted,
                     ValueType got) {
  std::ostringstream os;
  os << predicate_name(p) << " argument " << slot << " expects " << wanted
     << ", got " << value_type_name(got);
  return os.str();
}

// Type of the node given resolved child types. Appends issues on mismatch;
// the returned type is the one the node would have if its inputs were fixed.
ValueType check_node(const Node& n, const std::vector<ValueType>& ct,
                     const std::string& path, ValidationResult& r) {
  const Predicate p = n.pred;
  auto want = [&](int slot, ValueType t, std::string_view name) {
    if (ct[slot] != t) issue(r, path, type_err(p, slot, name, ct[slot]));
  };
  switch (p) {
    case Predicate::True:
    case Predicate::False:
      return ValueType::Bool;
    case Predicate::ArgX:
    case Predicate::ArgY:
    case Predicate::Arg:
      return ValueType::Anchor;
    case Predicate::Int:
      return ValueType::IntVal;
    case Predicate::String:
      return ValueType::Str;
    case Predicate::Token:
      if (n.str_value.find_first_of(" \t\n") != std::string::npos) {
        issue(r, path, "Token literal must be a single token");
      }
      return ValueType::Str;
    case Predicate::Because:
      want(0, ValueType::Bool, "Bool");
      return ValueType::Bool;
    case Predicate::Separator:
    case Predicate::And:
    case Predicate::Or:
      want(0, ValueType::Bool, "Bool");
      want(1, ValueType::Bool, "Bool");
      return ValueType::Bool;
    case Predicate::Not:
      want(0, ValueType::Bool, "Bool");
      return ValueType::Bool;
    case Predicate::Is:
      want(0, ValueType::Query, "Query");
      want(1, ValueType::Range, "Range");
      return ValueType::Bool;
    case Predicate::Occur:
      want(0, ValueType::Query, "Query");
      return ValueType::Bool;
    case Predicate::Left:
    case Predicate::Right:
      if (!is_locatable(ct[0])) {
        issue(r, path, type_err(p, 0, "a string or anchor", ct[0]));
      }
      return ValueType::Range;
    case Predicate::Between:
      for (int i = 0; i < 2; ++i) {
        if (!is_locatable(ct[i])) {
          issue(r, path, type_err(p, i, "a string or anchor", ct[i]));
        }
      }
      return ValueType::Range;
    case Predicate::Within:
      if (!is_locatable(ct[0])) {
        issue(r, path, type_err(p, 0, "a string or anchor", ct[0]));
      }
      want(1, ValueType::IntVal, "Int");
      return ValueType::Range;
    case Predicate::NumberOf:
      want(0, ValueType::Range, "Range");
      return ValueType::IntVal;
    case Predicate::Direct:
      want(0, ValueType::Range, "Range");
      return ValueType::Range;
    case Predicate::AtMost:
    case Predicate::AtLeast:
    case Predicate::MoreThan:
    case Predicate::LessThan:
    case Predicate::Equals:
      // Two overloads: (Range, Int) -> Range and (Int, Int) -> Bool.
      if (ct[0] == ValueType::Range) {
        want(1, ValueType::IntVal, "Int");
        return ValueType::Range;
      }
      if (ct[0] == ValueType::IntVal) {
        want(1, ValueType::IntVal, "Int");
        return ValueType::Bool;
      }
      issue(r, path, type_err(p, 0, "Range or Int", ct[0]));
      return ValueType::Bool;
    case Predicate::Word:
      want(0, ValueType::Str, "Str");
      return ValueType::Query;
    case Predicate::Contains:
      want(0, ValueType::Range, "Range");
      want(1, ValueType::Query, "Query");
      return ValueType::Bool;
    case Predicate::Link:
      want(0, ValueType::Query, "Query");
      want(1, ValueType::Query, "Query");
      return ValueType::Query;
  }
  return ValueType::Bool;
}

bool check_tree(const Node& n, const std::string& path, ValidationResult& r,
                ValueType& out) {
  if (static_cast<int>(n.children.size()) != arity(n.pred)) {
    std::ostringstream os;
    os << predicate_name(n.pred) << " takes " << arity(n.pred)
       << " argument(s), got " << n.children.size();
    issue(r, path, os.str());
    return false;
  }
  std::vector<ValueType> ct;
  ct.reserve(n.children.size());
  for (size_t i = 0; i < n.children.size(); ++i) {
    ValueType t;
    if (!check_tree(n.children[i], path + "." + std::to_string(i), r, t)) {
      return false;
    }
    ct.push_back(t);
  }
  size_t before = r.issues.size();
  out = check_node(n, ct, path, r);
  return r.issues.size() == before;
}

// Slots that accept a Query and therefore admit a Str literal via an
// implicit Word wrapper.
bool slot_wants_query(Predicate p, int slot) {
  switch (p) {
    case Predicate::Is:
    case Predicate::Occur:
      return slot == 0;
    case Predicate::Contains:
      return slot == 1;
    case Predicate::Link:
      return true;
    case Predicate::Left:
    case Predicate::Right:
      return slot == 0;
    case Predicate::Between:
      return true;
    case Predicate::Within:
      return slot == 0;
    default:
      return false;
  }
}

bool is_str_literal(const Node& n) {
  return n.pred == Predicate::String || n.pred == Predicate::Token;
}

}  // namespace

ValidationResult validate(const Node& root) {
  ValidationResult r;
  ValueType t;
  if (check_tree(root, "root", r, t)) {
    if (t != ValueType::Bool) {
      std::ostringstream os;
      os << "form must evaluate to Bool, got " << value_type_name(t);
      issue(r, "root", os.str());
    }
  }
  return r;
}

ValidationResult validate_at(const Node& node, const std::string& path,
                             ValueType& out_type) {
  ValidationResult r;
  check_tree(node, path, r, out_type);
  return r;
}

Node coerce_tree(const Node& root) {
  Node out = root;
  for (size_t i = 0; i < out.children.size(); ++i) {
    Node child = coerce_tree(out.children[i]);
    if (slot_wants_query(out.pred, static_cast<int>(i)) &&
        is_str_literal(child)) {
      child = make_node(Predicate::Word, {std::move(child)});
    }
    out.children[i] = std::move(child);
  }
  return out;
}

bool is_grounded(const Node& root) {
  ModuleClass c = module_class(root.pred);
  if (c == ModuleClass::StringMatch || c == ModuleClass::Deterministic) {
    return true;
  }
  for (const Node& ch : root.children) {
    if (is_grounded(ch)) return true;
  }
  return false;
}

}  // namespace next
