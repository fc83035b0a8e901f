#include "arud/unicode.hpp"

#include "arud/error.hpp"

namespace arud::unicode {

bool is_arabic_letter(char32_t c) noexcept {
  return (c >= 0x0621 && c <= 0x063A) || (c >= 0x0641 && c <= 0x064A) ||
         c == cp::kAlifWasla;
}

bool is_inventory_mark(char32_t c) noexcept {
  return (c >= 0x064B && c <= 0x0652) || c == cp::kSilenceMark;
}

bool is_ignorable_mark(char32_t c) noexcept {
  if (c == cp::kSilenceMark) return false;
  return c == cp::kTatweel || (c >= 0x0610 && c <= 0x061A) ||
         (c >= 0x0653 && c <= 0x065F) || c == 0x0670 ||
         (c >= 0x06D6 && c <= 0x06DC) || (c >= 0x06DF && c <= 0x06E4) ||
         (c >= 0x06E7 && c <= 0x06E8) || (c >= 0x06EA && c <= 0x06ED) ||
         (c >= 0x08D3 && c <= 0x08FF);
}

bool is_whitespace(char32_t c) noexcept {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f' || c == 0x00A0 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x202F || c == 0x3000;
}

bool is_sun_letter(char32_t c) noexcept {
  switch (c) {
    case U'ت': case U'ث': case U'د': case U'ذ':
    case U'ر': case U'ز': case U'س': case U'ش':
    case U'ص': case U'ض': case U'ط': case U'ظ':
    case U'ل': case U'ن':
      return true;
    default:
      return false;
  }
}

namespace {

std::u32string decode(std::string_view text, bool strict) {
  std::u32string out;
  out.reserve(text.size() / 2 + 1);
  const auto* p = reinterpret_cast<const unsigned char*>(text.data());
  const auto* end = p + text.size();
  bool bad = false;
  auto fail = [&] {
    if (strict) {
      throw Error(ErrorCode::ForeignCharacter,
                  "malformed UTF-8 at byte " +
                      std::to_string(p - reinterpret_cast<const unsigned char*>(text.data())));
    }
    bad = true;
  };
  while (p < end) {
    if (bad) {
      bad = false;
      ++p;
      continue;
    }
    unsigned char b = *p;
    char32_t c = 0;
    int extra = 0;
    if (b < 0x80) {
      c = b;
      extra = 0;
    } else if ((b & 0xE0) == 0xC0) {
      c = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      c = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      c = b & 0x07;
      extra = 3;
    } else {
      fail();
      continue;
    }
    if (end - p < extra + 1) {
      fail();
      continue;
    }
    for (int i = 1; i <= extra && !bad; ++i) {
      if ((p[i] & 0xC0) != 0x80) fail();
      c = (c << 6) | (p[i] & 0x3F);
    }
    if (bad) continue;
    static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (c < kMin[extra] || c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
      fail();
      continue;
    }
    out.push_back(c);
    p += extra + 1;
  }
  return out;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) { return decode(text, true); }

std::u32string decode_utf8_lossy(std::string_view text) { return decode(text, false); }

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t c : text) append_utf8(out, c);
  return out;
}

namespace {
char32_t composed(char32_t base, char32_t mark) noexcept {
  if (mark == cp::kMaddaAbove && base == cp::kAlif) return cp::kAlifMadda;
  if (mark == cp::kHamzaAbove) {
    if (base == cp::kAlif) return cp::kAlifHamzaAbove;
    if (base == cp::kWaw) return cp::kWawHamza;
    if (base == cp::kYeh) return cp::kYehHamza;
  }
  if (mark == cp::kHamzaBelow && base == cp::kAlif) return cp::kAlifHamzaBelow;
  return 0;
}

bool is_combining(char32_t c) noexcept {
  return is_inventory_mark(c) || is_ignorable_mark(c);
}
}  // namespace

std::u32string compose(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t base_pos = std::u32string::npos;
  for (char32_t c : text) {
    if (is_combining(c) && c != cp::kTatweel && base_pos != std::u32string::npos) {
      if (char32_t merged = composed(out[base_pos], c)) {
        out[base_pos] = merged;
        continue;
      }
      out.push_back(c);
      continue;
    }
    out.push_back(c);
    base_pos = is_arabic_letter(c) ? out.size() - 1 : std::u32string::npos;
  }
  return out;
}

}  // namespace arud::unicode
