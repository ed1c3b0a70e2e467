#include "h2cert/error.hpp"

namespace h2cert {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NonSquareTruncation: return "NonSquareTruncation";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::BoundsTooSmall: return "BoundsTooSmall";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PrecViolated: return "PrecViolated";
    case ErrorCode::RationalityViolated: return "RationalityViolated";
    case ErrorCode::ConstantRatio: return "ConstantRatio";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

AlgebraError::AlgebraError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw AlgebraError(code, message); }

}  // namespace h2cert
