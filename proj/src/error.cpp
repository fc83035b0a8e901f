#include "arud/error.hpp"

namespace arud {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LeadingDiacritic: return "LeadingDiacritic";
    case ErrorCode::ForeignCharacter: return "ForeignCharacter";
    case ErrorCode::ConflictingMarks: return "ConflictingMarks";
    case ErrorCode::EmptyLine: return "EmptyLine";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::DanglingWasl: return "DanglingWasl";
    case ErrorCode::ShaddaWithoutVowel: return "ShaddaWithoutVowel";
    case ErrorCode::UnderDiacritized: return "UnderDiacritized";
    case ErrorCode::InvalidBeatPattern: return "InvalidBeatPattern";
    case ErrorCode::EmptyHemistich: return "EmptyHemistich";
    case ErrorCode::LineTooShort: return "LineTooShort";
    case ErrorCode::EmptyEvaluation: return "EmptyEvaluation";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::TableFormat: return "TableFormat";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {
std::string format_message(ErrorCode code, const std::string& detail) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(format_message(code, detail)), code_(code) {}

}  // namespace arud
