#pragma once

#include <stdexcept>
#include <string>

namespace burst {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The received word is not a descendant of any codeword that satisfies the
// stored syndromes.
class NotDecodable : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured search budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace burst
