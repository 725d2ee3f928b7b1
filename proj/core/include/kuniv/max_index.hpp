#pragma once

#include <cstddef>
#include <string>

namespace kuniv {

// Maximum universality index over a language: a finite value or "unbounded"
// (the language holds words of every index).
class MaxIndex {
 public:
  static MaxIndex finite(std::size_t value) { return MaxIndex(false, value); }
  static MaxIndex unbounded() { return MaxIndex(true, 0); }

  bool is_unbounded() const noexcept { return unbounded_; }
  // Meaningless when unbounded.
  std::size_t value() const noexcept { return value_; }
  bool reaches(std::size_t k) const noexcept { return unbounded_ || value_ >= k; }

  std::string to_string() const { return unbounded_ ? "unbounded" : std::to_string(value_); }

  friend bool operator==(const MaxIndex&, const MaxIndex&) = default;

 private:
  MaxIndex(bool unbounded, std::size_t value) : unbounded_(unbounded), value_(value) {}
  bool unbounded_;
  std::size_t value_;
};

}  // namespace kuniv
