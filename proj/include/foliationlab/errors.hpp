#pragma once

#include <stdexcept>
#include <string>

namespace fl {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  ZeroEntry,
  ZeroForm,
  NotDivisible,
  CenterNotInvariant,
  CenterNotSingularAdapted,
  NotDicritical,
  DimensionError,
  ScriptChartMissing,
  OffFieldPoint,
  TruncationInconclusive,
  NotAUnit,
  SaddleNodeUnsupported,
  LineNotInvariant,
  NonRationalSingularPoint,
  DepthExceeded,
  IncompleteTree,
  InvalidGraph,
  MissingFiberData,
  NotRegular,
  UnclassifiableCurve,
  ZeroLambda,
  LeftDomain,
  StepTooLarge,
  BadParameters,
  SchemaError,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::CenterNotInvariant: return "CenterNotInvariant";
    case ErrorCode::CenterNotSingularAdapted: return "CenterNotSingularAdapted";
    case ErrorCode::NotDicritical: return "NotDicritical";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::ScriptChartMissing: return "ScriptChartMissing";
    case ErrorCode::OffFieldPoint: return "OffFieldPoint";
    case ErrorCode::TruncationInconclusive: return "TruncationInconclusive";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::SaddleNodeUnsupported: return "SaddleNodeUnsupported";
    case ErrorCode::LineNotInvariant: return "LineNotInvariant";
    case ErrorCode::NonRationalSingularPoint: return "NonRationalSingularPoint";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::IncompleteTree: return "IncompleteTree";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::MissingFiberData: return "MissingFiberData";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::UnclassifiableCurve: return "UnclassifiableCurve";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::LeftDomain: return "LeftDomain";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace fl
