#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgd {

enum class Errc {
  kSyntax,
  kArity,
  kIndexOutOfRange,
  kInvalidInput,
  kInvalidGroup,
  kNotGenerating,
  kOddPermutation,
  kBaseMissing,
  kSizeLimit,
  kNotSimple,
  kGuardInsufficient,
  kPresentationFails,
  kDiameterExceeded,
  kUnboundVariable,
  kNotClosed,
  kBudgetExceeded,
  kNotNormalizing,
  kIo,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with the byte offset and 1-based line/column of the
/// offending token.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, std::size_t line, std::size_t column,
             std::string expected, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace sgd
