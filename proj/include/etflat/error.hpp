#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etflat {

enum class ErrorCode {
  SingularMatrix,
  PivotBreakdown,
  NegativeRadicand,
  SizeMismatch,
  MalformedPattern,
  SingularCirculant,
  BothSingular,
  IrrationalAlpha,
  SingularD,
  SingularN,
  SingularLeadBlock,
  NotPositiveDefinite,
  UnknownSelector,
  CacheCorrupt,
  InvalidArgument,
  BudgetExceeded,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::PivotBreakdown: return "PivotBreakdown";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::MalformedPattern: return "MalformedPattern";
    case ErrorCode::SingularCirculant: return "SingularCirculant";
    case ErrorCode::BothSingular: return "BothSingular";
    case ErrorCode::IrrationalAlpha: return "IrrationalAlpha";
    case ErrorCode::SingularD: return "SingularD";
    case ErrorCode::SingularN: return "SingularN";
    case ErrorCode::SingularLeadBlock: return "SingularLeadBlock";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::UnknownSelector: return "UnknownSelector";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace etflat
