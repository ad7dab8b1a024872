#ifndef ARCRIGID_ERROR_HPP
#define ARCRIGID_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arcrigid {

enum class ErrorKind {
  UniverseMismatch,
  EmptyHyperedge,
  PreconditionViolated,
  TooLarge,
  NotCA,
  NotAnArcOrdering,
  NotAnIntervalOrdering,
  RelationViolated,
  Inconsistent,
  NotRealizable,
  TooManyUniversalVertices,
  UniversalVertex,
  MalformedModel,
  AmbiguousDirection,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` discriminates.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace arcrigid

#endif  // ARCRIGID_ERROR_HPP
