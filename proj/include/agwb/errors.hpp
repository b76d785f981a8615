#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agwb {

  // Base class for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Bad arguments: out-of-range element, mismatched orders, unknown names.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // A precondition on the algebra does not hold (no left identity, empty
  // ideal, P is not an ideal, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace agwb
