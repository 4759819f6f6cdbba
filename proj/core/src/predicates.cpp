#include "next/predicates.hpp"

#include <array>
#include <unordered_map>

namespace next {

namespace {

struct PredInfo {
  std::string_view name;
  int arity;
  ModuleClass cls;
};

constexpr std::array<PredInfo, kNumPredicates> kTable = {{
    {"Because", 1, ModuleClass::None},
    {"Separator", 2, ModuleClass::None},
    {"ArgX", 0, ModuleClass::None},
    {"ArgY", 0, ModuleClass::None},
    {"Arg", 0, ModuleClass::None},
    {"Int", 0, ModuleClass::None},
    {"Token", 0, ModuleClass::None},
    {"String", 0, ModuleClass::None},
    {"True", 0, ModuleClass::None},
    {"False", 0, ModuleClass::None},
    {"And", 2, ModuleClass::Logical},
    {"Or", 2, ModuleClass::Logical},
    {"Not", 1, ModuleClass::Logical},
    {"Is", 2, ModuleClass::Logical},
    {"Occur", 1, ModuleClass::Logical},
    {"Left", 1, ModuleClass::Deterministic},
    {"Right", 1, ModuleClass::Deterministic},
    {"Between", 2, ModuleClass::Deterministic},
    {"Within", 2, ModuleClass::Deterministic},
    {"NumberOf", 1, ModuleClass::Deterministic},
    {"AtMost", 2, ModuleClass::Counting},
    {"AtLeast", 2, ModuleClass::Counting},
    {"Direct", 1, ModuleClass::Counting},
    {"MoreThan", 2, ModuleClass::Counting},
    {"LessThan", 2, ModuleClass::Counting},
    {"Equals", 2, ModuleClass::Counting},
    {"Word", 1, ModuleClass::StringMatch},
    {"Contains", 2, ModuleClass::StringMatch},
    {"Link", 2, ModuleClass::StringMatch},
}};

}  // namespace

ModuleClass module_class(Predicate p) {
  return kTable[static_cast<size_t>(p)].cls;
}

int arity(Predicate p) { return kTable[static_cast<size_t>(p)].arity; }

std::string_view predicate_name(Predicate p) {
  return kTable[static_cast<size_t>(p)].name;
}

std::optional<Predicate> predicate_from_name(std::string_view name) {
  static const std::unordered_map<std::string_view, Predicate> index = [] {
    std::unordered_map<std::string_view, Predicate> m;
    for (int i = 0; i < kNumPredicates; ++i) {
      m.emplace(kTable[i].name, static_cast<Predicate>(i));
    }
    return m;
  }();
  auto it = index.find(name);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

}  // namespace next
