#pragma once

#include <stdexcept>
#include <string>

namespace shelfpack {

/// Input outside an operation's mathematical domain (non-positive size,
/// negative gap, empty placement, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed instance, placement or partition file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Raised when a decoded reduction placement contradicts the reduction's
/// guarantees. Signals a bug in the verifier or the construction.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shelfpack
