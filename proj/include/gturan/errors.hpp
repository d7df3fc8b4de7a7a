#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gturan {

/// Raised when an input exceeds an operational limit (order of a graph,
/// enumeration range, ...). Distinct from malformed input.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the byte offset of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gturan
