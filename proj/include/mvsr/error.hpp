#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvsr {

enum class ErrorKind {
  MalformedTable,
  NotIdempotent,
  NegationOfTop,
  ChainTooShort,
  SizeGuard,
  EnumGuard,
  NotAnIdeal,
  NotACongruence,
  TooManyVariables,
  ParseError,
  NotAHom,
  NotFreeBasis,
  NoDecomposition,
  ShapeMismatch,
  ScalarMismatch,
  NotCyclic,
  IllDefinedAction,
  NotOnto,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the toolkit carries one of the ErrorKind tags.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  /// SizeGuard and EnumGuard are resource-bound breaches, not law violations.
  [[nodiscard]] bool is_guard() const noexcept {
    return kind_ == ErrorKind::SizeGuard || kind_ == ErrorKind::EnumGuard;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace mvsr
