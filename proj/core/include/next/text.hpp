#pragma once

#include <string>
#include <vector>

namespace next {

// Token span [begin, end) over an instance's token sequence.
struct Span {
  int begin = 0;
  int end = 0;
  bool operator==(const Span&) const = default;
  int size() const { return end - begin; }
};

std::string lowercase(std::string_view s);

// Whitespace split with leading/trailing punctuation peeled off into their
// own tokens. Inner punctuation (hyphens, apostrophes) stays attached, so
// role markers like SUBJ-PERSON survive as single tokens. Casing preserved.
std::vector<std::string> tokenize(std::string_view text);

struct ExplToken {
  std::string text;
  bool quoted = false;
};

// Tokenizer for explanation sentences: double-quoted segments become a
// single token with quoted=true (inner text verbatim); the rest tokenizes
// like tokenize().
std::vector<ExplToken> tokenize_explanation(std::string_view text);

// All exact (case-insensitive) occurrences of a phrase in a token sequence.
// The phrase is tokenized with tokenize(); empty phrase yields no matches.
std::vector<Span> find_occurrences(const std::vector<std::string>& tokens,
                                   const std::string& phrase);

}  // namespace next
