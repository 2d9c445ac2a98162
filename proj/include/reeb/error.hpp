#pragma once

#include <stdexcept>
#include <string>

namespace reeb {

/// Raised when an operation's input violates its documented precondition
/// (bad orientation, wrong degree pattern, rank mismatch, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the text loaders on malformed input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace reeb
