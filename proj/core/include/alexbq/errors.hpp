#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alexbq {

/// Malformed text input. Carries a 1-based line and column when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid diagram or argument outside an operation's domain.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic request with no answer (zero divisor, leading term of zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured work cap (Groebner basis size, pair count, minor count) was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alexbq
