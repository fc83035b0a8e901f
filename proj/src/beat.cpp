#include "arud/beat.hpp"

#include "arud/error.hpp"

namespace arud {

BeatPattern BeatPattern::parse(std::string_view digits) {
  BeatPattern p;
  for (char c : digits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidBeatPattern, std::string(digits));
    }
  }
  p.digits_.assign(digits);
  return p;
}

BeatPattern BeatPattern::slice(std::size_t pos, std::size_t count) const {
  BeatPattern p;
  if (pos < digits_.size()) p.digits_ = digits_.substr(pos, count);
  return p;
}

bool BeatPattern::starts_with(const BeatPattern& prefix) const noexcept {
  return digits_.size() >= prefix.digits_.size() &&
         digits_.compare(0, prefix.digits_.size(), prefix.digits_) == 0;
}

}  // namespace arud
