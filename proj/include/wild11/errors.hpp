#pragma once

#include <stdexcept>
#include <string>

namespace wild11 {

// Bad input from the caller: wrong kind, parameter out of range, non-prime.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// The request is well-formed but outside what this library computes
// (field too large, wild characteristic, reducible fibres, ...).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical consistency gate failed. These indicate a wrong tally or an
// arithmetic bug, never a user mistake.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wild11
