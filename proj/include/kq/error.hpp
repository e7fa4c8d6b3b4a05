#pragma once

#include <stdexcept>
#include <string>

namespace kq {

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace kq
