#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace h2cert {

/// Failure categories shared by every module. The CLI maps all of them to
/// exit status 2 and prints the name returned by error_name().
enum class ErrorCode {
  NotPrime,
  NotAUnit,
  UnsupportedRing,
  ZeroDenominator,
  RingMismatch,
  OrderMismatch,
  NonSquareTruncation,
  PrimeMismatch,
  BoundsTooSmall,
  RankMismatch,
  IndexOutOfRange,
  PrecViolated,
  RationalityViolated,
  ConstantRatio,
  BadIndex,
  NotDivisible,
  BadWindow,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace h2cert
