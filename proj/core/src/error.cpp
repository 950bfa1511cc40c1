#include "sgd/error.hpp"

namespace sgd {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kSyntax: return "SyntaxError";
    case Errc::kArity: return "ArityError";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kInvalidGroup: return "InvalidGroup";
    case Errc::kNotGenerating: return "NotGenerating";
    case Errc::kOddPermutation: return "OddPermutation";
    case Errc::kBaseMissing: return "BaseMissing";
    case Errc::kSizeLimit: return "SizeLimit";
    case Errc::kNotSimple: return "NotSimple";
    case Errc::kGuardInsufficient: return "GuardInsufficient";
    case Errc::kPresentationFails: return "PresentationFails";
    case Errc::kDiameterExceeded: return "DiameterExceeded";
    case Errc::kUnboundVariable: return "UnboundVariable";
    case Errc::kNotClosed: return "NotClosed";
    case Errc::kBudgetExceeded: return "BudgetExceeded";
    case Errc::kNotNormalizing: return "NotNormalizing";
    case Errc::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(Errc code, std::size_t offset, std::size_t line, std::size_t column,
                       std::string expected, const std::string& message)
    : Error(code, message + " at line " + std::to_string(line) + ", column " +
                      std::to_string(column) + " (expected " + expected + ")"),
      offset_(offset),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace sgd
