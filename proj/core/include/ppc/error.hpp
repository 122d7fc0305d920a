#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ppc {

enum class ErrorKind {
  EndpointOutOfRange,
  EmptyVertexSet,
  EmptyList,
  SizeTooSmall,
  BudgetExceeded,   // a construction would exceed the vertex budget
  BudgetExhausted,  // a search hit its node limit; the answer is unknown
  ParseError,
  FormatUnsupported,
  PinOutOfRange,
  ArityMismatch,
  UnknownBuiltin,
  ConstantOutOfRange,
  TermOutOfRange,
  NotACore,
  TooFewVertices,
  IsTotallyRectangular,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::BudgetExceeded ||
           kind_ == ErrorKind::BudgetExhausted;
  }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::ParseError, std::to_string(line) + ":" +
                                         std::to_string(column) + ": " +
                                         message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ppc
