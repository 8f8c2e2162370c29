#pragma once

#include <stdexcept>
#include <string>

namespace corkcalc {

// Input outside an operation's domain (bad index, zero evaluation point, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two routes that must agree did not. Always indicates a bug or an injected fault.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace corkcalc
