#pragma once

// Arabic code point inventory and UTF-8 conversion.

#include <string>
#include <string_view>

namespace arud::unicode {

namespace cp {
inline constexpr char32_t kHamza = U'ء';
inline constexpr char32_t kAlifMadda = U'آ';
inline constexpr char32_t kAlifHamzaAbove = U'أ';
inline constexpr char32_t kWawHamza = U'ؤ';
inline constexpr char32_t kAlifHamzaBelow = U'إ';
inline constexpr char32_t kYehHamza = U'ئ';
inline constexpr char32_t kAlif = U'ا';
inline constexpr char32_t kTehMarbuta = U'ة';
inline constexpr char32_t kTatweel = U'ـ';
inline constexpr char32_t kKaf = U'ك';
inline constexpr char32_t kLam = U'ل';
inline constexpr char32_t kMeem = U'م';
inline constexpr char32_t kNoon = U'ن';
inline constexpr char32_t kHeh = U'ه';
inline constexpr char32_t kWaw = U'و';
inline constexpr char32_t kAlifMaksura = U'ى';
inline constexpr char32_t kYeh = U'ي';
inline constexpr char32_t kTeh = U'ت';
inline constexpr char32_t kFeh = U'ف';
inline constexpr char32_t kBeh = U'ب';
inline constexpr char32_t kSeen = U'س';
inline constexpr char32_t kAlifWasla = U'ٱ';

inline constexpr char32_t kTanwinFath = U'ً';
inline constexpr char32_t kTanwinDamm = U'ٌ';
inline constexpr char32_t kTanwinKasr = U'ٍ';
inline constexpr char32_t kFatha = U'َ';
inline constexpr char32_t kDamma = U'ُ';
inline constexpr char32_t kKasra = U'ِ';
inline constexpr char32_t kShadda = U'ّ';
inline constexpr char32_t kSukun = U'ْ';
inline constexpr char32_t kSilenceMark = U'۠';

inline constexpr char32_t kMaddaAbove = U'ٓ';
inline constexpr char32_t kHamzaAbove = U'ٔ';
inline constexpr char32_t kHamzaBelow = U'ٕ';
}  // namespace cp

/// Base letters accepted by the parser: the core Arabic block letters plus
/// the wasl alif.
bool is_arabic_letter(char32_t c) noexcept;

/// One of the nine structural marks (eight harakat-block marks + silence mark).
bool is_inventory_mark(char32_t c) noexcept;

/// Arabic-script combining marks and tatweel that carry no prosodic content
/// here and are dropped by normalization.
bool is_ignorable_mark(char32_t c) noexcept;

bool is_whitespace(char32_t c) noexcept;

bool is_sun_letter(char32_t c) noexcept;

/// Decodes UTF-8. Throws Error{ForeignCharacter} on malformed input.
std::u32string decode_utf8(std::string_view text);

/// Decodes UTF-8, silently skipping bytes that do not start a valid sequence.
std::u32string decode_utf8_lossy(std::string_view text);
std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t c);

/// Composes alif/waw/yeh with combining madda or hamza into their
/// precomposed letters (U+0622..U+0626). No canonical reordering is done:
/// mark order is owned by the parser and renderer.
std::u32string compose(std::u32string_view text);

}  // namespace arud::unicode
