#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbpoly {

// Graph or subset exceeds the 64-vertex single-word capacity.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation is undefined for the given graph (e.g. polynomials of the
// order-0 graph).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument to a constructor, operation or family generator.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input. offset() is the byte position of the defect.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace nbpoly
