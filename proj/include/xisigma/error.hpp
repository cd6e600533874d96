#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xisigma {

enum class ErrorKind {
  CarrierMismatch,
  UnknownPoint,
  NotInAlgebra,
  UnsupportedModel,
  InsufficientDisjointSets,
  RealSession,
  EmptyTestFamily,
  NotHausdorff,
  NotApplicable,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the engine; `kind()` tells callers
/// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xisigma
