#pragma once

#include <stdexcept>

namespace next {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Łukasiewicz connectives over [0,1]:
//   and: max(p1 + p2 - 1, 0)   or: min(p1 + p2, 1)   not: 1 - p
// Inputs outside [0,1] by more than 1e-12 raise DomainError; values inside
// the tolerance band are snapped to the boundary.
double luk_and(double p1, double p2);
double luk_or(double p1, double p2);
double luk_not(double p);

}  // namespace next
