#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace underdog
{

/// Failure categories raised by the library. The CLI maps every kind except
/// Internal to exit code 2.
enum class ErrorKind
{
   Parse,
   Validation,
   EmptyEdition,
   InvalidLambda,
   TeamNotFound,
   NoPriorRanking,
   AllUndefined,
   ZeroDenominator,
   TooFewSamples,
   TooFewGroups,
   DegenerateCenter,
   AllMissing,
   ConstantColumn,
   DegenerateMatrix,
   TooFewComponents,
   InvalidConfig,
   Internal,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
   switch (kind) {
   case ErrorKind::Parse: return "ParseError";
   case ErrorKind::Validation: return "ValidationError";
   case ErrorKind::EmptyEdition: return "EmptyEdition";
   case ErrorKind::InvalidLambda: return "InvalidLambda";
   case ErrorKind::TeamNotFound: return "TeamNotFound";
   case ErrorKind::NoPriorRanking: return "NoPriorRanking";
   case ErrorKind::AllUndefined: return "AllUndefined";
   case ErrorKind::ZeroDenominator: return "ZeroDenominator";
   case ErrorKind::TooFewSamples: return "TooFewSamples";
   case ErrorKind::TooFewGroups: return "TooFewGroups";
   case ErrorKind::DegenerateCenter: return "DegenerateCenter";
   case ErrorKind::AllMissing: return "AllMissing";
   case ErrorKind::ConstantColumn: return "ConstantColumn";
   case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
   case ErrorKind::TooFewComponents: return "TooFewComponents";
   case ErrorKind::InvalidConfig: return "InvalidConfig";
   case ErrorKind::Internal: return "InternalError";
   }
   return "Error";
}

class Error : public std::runtime_error
{
  public:
   Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
   {}

   ErrorKind kind() const noexcept { return kind_; }

  private:
   ErrorKind kind_;
};

/// Malformed input; line is 1-based and 0 when unknown.
class ParseError : public Error
{
  public:
   ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::Parse, line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
   {}

   std::size_t line() const noexcept { return line_; }

  private:
   std::size_t line_;
};

class ValidationError : public Error
{
  public:
   ValidationError(std::size_t line, const std::string& message)
      : Error(ErrorKind::Validation, line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
   {}

   std::size_t line() const noexcept { return line_; }

  private:
   std::size_t line_;
};

} // namespace underdog
