#include "next/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace next {

namespace {

void print_rec(const Node& n, std::ostream& os) {
  switch (n.pred) {
    case Predicate::Int:
      os << n.int_value;
      return;
    case Predicate::String:
      os << '"';
      for (char c : n.str_value) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
      }
      os << '"';
      return;
    default:
      break;
  }
  if (arity(n.pred) == 0 && n.pred != Predicate::Token) {
    os << predicate_name(n.pred);
    return;
  }
  os << '(' << predicate_name(n.pred);
  if (n.pred == Predicate::Token) {
    Node s = lit_string(n.str_value);
    os << ' ';
    print_rec(s, os);
  }
  for (const Node& c : n.children) {
    os << ' ';
    print_rec(c, os);
  }
  os << ')';
}

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw SexprError("unexpected end of input");
    return text[pos];
  }
  char next() {
    char c = peek();
    ++pos;
    return c;
  }
  std::string read_symbol() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"') break;
      ++pos;
    }
    if (pos == start) throw SexprError("expected symbol at offset " + std::to_string(pos));
    return text.substr(start, pos - start);
  }
  std::string read_string() {
    if (next() != '"') throw SexprError("expected string");
    std::string out;
    while (pos < text.size()) {
      char c = text[pos++];
      if (c == '\\') {
        if (pos >= text.size()) throw SexprError("dangling escape in string");
        out.push_back(text[pos++]);
      } else if (c == '"') {
        return out;
      } else {
        out.push_back(c);
      }
    }
    throw SexprError("unterminated string literal");
  }
};

bool is_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Node parse_rec(Lexer& lx) {
  char c = lx.peek();
  if (c == '"') return lit_string(lx.read_string());
  if (c == '(') {
    lx.next();
    std::string sym = lx.read_symbol();
    auto pred = predicate_from_name(sym);
    if (!pred) throw SexprError("unknown predicate: " + sym);
    Node n;
    n.pred = *pred;
    if (*pred == Predicate::Token) {
      if (lx.peek() != '"') throw SexprError("Token expects a string literal");
      n.str_value = lx.read_string();
    } else {
      while (lx.peek() != ')') n.children.push_back(parse_rec(lx));
    }
    if (lx.next() != ')') throw SexprError("expected ')'");
    return n;
  }
  std::string sym = lx.read_symbol();
  if (is_int_token(sym)) return lit_int(std::stol(sym));
  auto pred = predicate_from_name(sym);
  if (!pred) throw SexprError("unknown symbol: " + sym);
  if (arity(*pred) != 0) {
    throw SexprError(std::string(predicate_name(*pred)) + " requires arguments");
  }
  Node n;
  n.pred = *pred;
  return n;
}

}  // namespace

std::string print_sexpr(const Node& node) {
  std::ostringstream os;
  print_rec(node, os);
  return os.str();
}

Node parse_sexpr(const std::string& text) {
  Lexer lx{text};
  Node n = parse_rec(lx);
  if (!lx.eof()) throw SexprError("trailing input after form");
  return coerce_tree(n);
}

}  // namespace next
