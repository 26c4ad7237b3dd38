#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sharplat {

enum class ErrorKind {
  BadSchema,
  NotAPartialOrder,
  NotALattice,
  NotCommutative,
  NotAssociative,
  NoIdentity,
  NotDistributive,
  NotPrime,
  DegenerateQuotient,
  SizeTooSmall,
  ZeroDivisor,
  // Raised when a derived structure fails the axioms; always an implementation bug.
  InternalValidationFailure,
  // The four sharpness checks disagreed.
  InternalEquivalenceViolation,
  ClaimFalsified,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind and a witness tuple of element
/// names (least witness in canonical order).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

/// True for errors caused by malformed or non-axiomatic input (CLI exit 2).
bool is_input_error(ErrorKind kind);

}  // namespace sharplat
