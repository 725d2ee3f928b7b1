#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kuniv {

// Malformed or inconsistent input (bad file, mismatched alphabets, violated
// preconditions on user-supplied values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A textual input could not be parsed. `location()` is a 1-based line number
// for line-oriented formats and a 0-based character offset for regexes.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t location)
      : InputError(what), location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

// The instance exceeds a configured size bound of an exponential algorithm.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kuniv
