#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arud/random.hpp"
#include "arud/script.hpp"
#include "arud/tables.hpp"
#include "arud/taqti.hpp"

namespace arud::test {

inline const DataTables& tables() {
  static const DataTables t = load_tables(ARUD_TEST_DATA_DIR);
  return t;
}

inline ScriptLine line_of(std::string_view text, bool verse_final = false) {
  ScriptLine line = script::parse_line(text);
  line.verse_final = verse_final;
  return line;
}

inline std::string beats_of(std::string_view text, bool verse_final = false,
                            bool sentence_initial = true) {
  return taqti::scan(line_of(text, verse_final), tables(), sentence_initial).beats.str();
}

inline std::string transcribe(std::string_view text, bool verse_final = false,
                              bool sentence_initial = true) {
  return render(taqti::scan(line_of(text, verse_final), tables(), sentence_initial).transcription);
}

/// Canonical rendering of hand-written text, for comparing rule outputs.
inline std::string canon(std::string_view text) { return script::render_line(script::parse_line(text)); }

/// Replays a fixed sequence of raw 64-bit draws, then repeats `fallback`.
class ScriptedSource final : public RandomSource {
 public:
  explicit ScriptedSource(std::vector<std::uint64_t> values, std::uint64_t fallback = 0)
      : values_(std::move(values)), fallback_(fallback) {}
  std::uint64_t next() override { return pos_ < values_.size() ? values_[pos_++] : fallback_; }
  std::size_t consumed() const noexcept { return pos_; }

 private:
  std::vector<std::uint64_t> values_;
  std::uint64_t fallback_;
  std::size_t pos_ = 0;
};

/// A raw draw whose uniform01() value is `u` (to 53-bit resolution).
inline std::uint64_t draw_for(double u) {
  return static_cast<std::uint64_t>(u * 0x1.0p53) << 11;
}

}  // namespace arud::test
