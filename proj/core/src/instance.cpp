#include "next/instance.hpp"

#include <set>
#include <sstream>

namespace next {

Span Instance::anchor(const std::string& role) const {
  auto it = anchors.find(role);
  if (it == anchors.end()) {
    throw AnchorMissing("instance " + id + " has no anchor for role " + role);
  }
  return it->second;
}

std::vector<std::string> Instance::check() const {
  std::vector<std::string> errs;
  for (const auto& [role, span] : anchors) {
    if (span.begin < 0 || span.end > size() || span.begin >= span.end) {
      std::ostringstream os;
      os << "anchor " << role << " span [" << span.begin << "," << span.end
         << ") invalid for " << size() << " tokens";
      errs.push_back(os.str());
    }
  }
  return errs;
}

LabelSet LabelSet::make(std::vector<std::string> labels, std::string none_label) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate label: " + l);
    }
  }
  if (seen.count(none_label) != 1) {
    throw std::invalid_argument("label set must contain the None label exactly once");
  }
  LabelSet ls;
  ls.labels = std::move(labels);
  ls.none_label = std::move(none_label);
  return ls;
}

int LabelSet::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace next
