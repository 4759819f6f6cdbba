#include "next/fuzzy.hpp"

#include <algorithm>
#include <string>

namespace next {

namespace {

constexpr double kTol = 1e-12;

double checked(double p, const char* what) {
  if (p < -kTol || p > 1.0 + kTol) {
    throw DomainError(std::string(what) + " input outside [0,1]: " + std::to_string(p));
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double luk_and(double p1, double p2) {
  p1 = checked(p1, "luk_and");
  p2 = checked(p2, "luk_and");
  return std::max(p1 + p2 - 1.0, 0.0);
}

double luk_or(double p1, double p2) {
  p1 = checked(p1, "luk_or");
  p2 = checked(p2, "luk_or");
  return std::min(p1 + p2, 1.0);
}

double luk_not(double p) { return 1.0 - checked(p, "luk_not"); }

}  // namespace next
