#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arud {

enum class ErrorCode {
  // script
  LeadingDiacritic,
  ForeignCharacter,
  ConflictingMarks,
  EmptyLine,
  EmptyWord,
  // taqti
  DanglingWasl,
  ShaddaWithoutVowel,
  UnderDiacritized,
  InvalidBeatPattern,
  // corpus / masking / metrics
  EmptyHemistich,
  LineTooShort,
  EmptyEvaluation,
  InvalidConfig,
  // data files and streams
  TableFormat,
  MalformedRecord,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. `code()` is the stable,
/// machine-readable part; `what()` adds human context (offending word, line).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arud
