#pragma once

#include <stdexcept>
#include <string>

namespace pairflip {

// An argument outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pairflip
