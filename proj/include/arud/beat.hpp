#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace arud {

/// A rhythmic pattern: '1' for a vocalized letter, '0' for an unvocalized one.
/// Stored as ASCII digits so it serializes as itself.
class BeatPattern {
 public:
  BeatPattern() = default;

  /// Throws Error{InvalidBeatPattern} unless `digits` is over {0,1}.
  static BeatPattern parse(std::string_view digits);

  void push(bool vocalized) { digits_.push_back(vocalized ? '1' : '0'); }
  void append(const BeatPattern& other) { digits_ += other.digits_; }

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  bool operator[](std::size_t i) const noexcept { return digits_[i] == '1'; }

  BeatPattern slice(std::size_t pos, std::size_t count) const;
  bool starts_with(const BeatPattern& prefix) const noexcept;

  const std::string& str() const noexcept { return digits_; }

  friend auto operator<=>(const BeatPattern&, const BeatPattern&) = default;

 private:
  std::string digits_;
};

}  // namespace arud
