#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "next/text.hpp"

namespace next {

struct AnchorMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Anchor roles a form can reference. ArgX = SUBJECT, ArgY = OBJECT,
// Arg = TERM (aspect term).
inline constexpr const char* kSubjectRole = "SUBJECT";
inline constexpr const char* kObjectRole = "OBJECT";
inline constexpr const char* kTermRole = "TERM";

// A tokenized sentence with anchor spans. Immutable after construction;
// safe to share across threads.
struct Instance {
  std::string id;
  std::vector<std::string> tokens;
  std::map<std::string, Span> anchors;

  int size() const { return static_cast<int>(tokens.size()); }

  // Throws AnchorMissing if the role is absent.
  Span anchor(const std::string& role) const;

  // Spans in bounds and non-empty; error strings on violation.
  std::vector<std::string> check() const;
};

// Ordered label set with a distinguished None label.
struct LabelSet {
  std::vector<std::string> labels;
  std::string none_label;

  // Throws std::invalid_argument unless labels are unique and none_label
  // occurs exactly once among them.
  static LabelSet make(std::vector<std::string> labels, std::string none_label);

  int index_of(const std::string& label) const;  // -1 when absent
  int size() const { return static_cast<int>(labels.size()); }
};

}  // namespace next
