#include "lenicer/kana.h"

#include "lenicer/errors.h"
#include "lenicer/unicode.h"

namespace lenicer {

namespace {

constexpr char32_t kOffset = 0x60;  // hiragana block to katakana block

bool hira_scalar(char32_t c) {
  return (c >= 0x3041 && c <= 0x3096) || c == 0x309D || c == 0x309E;
}

bool kata_scalar_with_hira(char32_t c) {
  return (c >= 0x30A1 && c <= 0x30F6) || c == 0x30FD || c == 0x30FE;
}

}  // namespace

bool is_hiragana_convertible(std::u32string_view s) {
  for (char32_t c : s) {
    if (!hira_scalar(c) && !is_prolonged_mark(c)) return false;
  }
  return true;
}

bool is_katakana_convertible(std::u32string_view s) {
  for (char32_t c : s) {
    if (!kata_scalar_with_hira(c) && !is_prolonged_mark(c)) return false;
  }
  return true;
}

std::u32string hira_to_kata(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (hira_scalar(c)) {
      out.push_back(c + kOffset);
    } else if (is_prolonged_mark(c)) {
      out.push_back(c);
    } else {
      throw NotConvertibleError("scalar U+" + std::to_string(static_cast<uint32_t>(c)) +
                                " is not hiragana");
    }
  }
  return out;
}

std::u32string kata_to_hira(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (kata_scalar_with_hira(c)) {
      out.push_back(c - kOffset);
    } else if (is_prolonged_mark(c)) {
      out.push_back(c);
    } else {
      throw NotConvertibleError("scalar U+" + std::to_string(static_cast<uint32_t>(c)) +
                                " has no hiragana counterpart");
    }
  }
  return out;
}

bool is_valid_reading(std::u32string_view s) {
  for (char32_t c : s) {
    if (!hira_scalar(c) && !is_prolonged_mark(c)) return false;
  }
  return true;
}

}  // namespace lenicer
