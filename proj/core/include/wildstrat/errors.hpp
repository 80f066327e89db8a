#pragma once

#include <stdexcept>
#include <string>

namespace wildstrat {

// Bad input: inadmissible data, failed preconditions, malformed config.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural claim that the library checks at runtime turned out false.
class ClaimViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wildstrat
