#include "next/text.hpp"

#include <cctype>

namespace next {

namespace {

bool is_peel_punct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '[': case ']': case '"':
      return true;
    default:
      return false;
  }
}

void emit_word(std::string_view word, std::vector<std::string>& out) {
  size_t b = 0, e = word.size();
  while (b < e && is_peel_punct(word[b])) {
    out.emplace_back(1, word[b]);
    ++b;
  }
  size_t tail = e;
  while (tail > b && is_peel_punct(word[tail - 1])) --tail;
  if (tail > b) out.emplace_back(word.substr(b, tail - b));
  for (size_t i = tail; i < e; ++i) out.emplace_back(1, word[i]);
}

}  // namespace

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) emit_word(text.substr(start, i - start), out);
  }
  return out;
}

std::vector<ExplToken> tokenize_explanation(std::string_view text) {
  std::vector<ExplToken> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '"') {
      size_t close = text.find('"', i + 1);
      if (close != std::string_view::npos) {
        out.push_back({std::string(text.substr(i + 1, close - i - 1)), true});
        i = close + 1;
        continue;
      }
      // unbalanced quote: fall through and treat as plain text
    }
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '"') {
      ++i;
    }
    for (const std::string& w : tokenize(text.substr(start, i - start))) {
      out.push_back({w, false});
    }
  }
  return out;
}

std::vector<Span> find_occurrences(const std::vector<std::string>& tokens,
                                   const std::string& phrase) {
  std::vector<Span> out;
  std::vector<std::string> pat = tokenize(lowercase(phrase));
  if (pat.empty() || pat.size() > tokens.size()) return out;
  for (size_t i = 0; i + pat.size() <= tokens.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < pat.size(); ++j) {
      if (lowercase(tokens[i + j]) != pat[j]) {
        match = false;
        break;
      }
    }
    if (match) {
      out.push_back({static_cast<int>(i), static_cast<int>(i + pat.size())});
    }
  }
  return out;
}

}  // namespace next
