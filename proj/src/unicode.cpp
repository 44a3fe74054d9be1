#include "lenicer/unicode.h"

#include <array>
#include <stdexcept>
#include <unordered_map>

namespace lenicer {

std::u32string utf8_decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t c = 0;
    size_t n = 0;
    if (b0 < 0x80) {
      c = b0;
      n = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      c = b0 & 0x1F;
      n = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      c = b0 & 0x0F;
      n = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      c = b0 & 0x07;
      n = 4;
    } else {
      throw std::invalid_argument("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + n > s.size()) throw std::invalid_argument("truncated UTF-8 sequence");
    for (size_t k = 1; k < n; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) throw std::invalid_argument("invalid UTF-8 continuation byte");
      c = (c << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (c < kMin[n] || c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
      throw std::invalid_argument("invalid UTF-8 scalar at offset " + std::to_string(i));
    }
    out.push_back(c);
    i += n;
  }
  return out;
}

std::string utf8_encode(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

std::string utf8_encode(std::u32string_view s) {
  std::string out;
  out.reserve(s.size() * 3);
  for (char32_t c : s) out += utf8_encode(c);
  return out;
}

bool is_hiragana(char32_t c) {
  return (c >= 0x3041 && c <= 0x3096) || c == 0x309D || c == 0x309E;
}

bool is_katakana(char32_t c) {
  return (c >= 0x30A1 && c <= 0x30FA) || c == 0x30FD || c == 0x30FE;
}

bool is_prolonged_mark(char32_t c) { return c == 0x30FC; }

bool is_kana(char32_t c) {
  return is_hiragana(c) || is_katakana(c) || is_prolonged_mark(c);
}

bool is_kanji(char32_t c) {
  return (c >= 0x4E00 && c <= 0x9FFF) ||   // CJK Unified Ideographs
         (c >= 0x3400 && c <= 0x4DBF) ||   // Extension A
         (c >= 0xF900 && c <= 0xFAFF) ||   // Compatibility Ideographs
         c == 0x3005;                      // iteration mark 々
}

bool is_lexical_char(char32_t c) { return is_kana(c) || is_kanji(c); }

bool is_punct_char(char32_t c) {
  if (c <= 0x20 || c == 0x7F) return true;                   // ASCII control/space
  if (c >= 0x21 && c <= 0x2F) return true;                   // !"#$%&'()*+,-./
  if (c >= 0x3A && c <= 0x40) return true;                   // :;<=>?@
  if (c >= 0x5B && c <= 0x60) return true;                   // [\]^_`
  if (c >= 0x7B && c <= 0x7E) return true;                   // {|}~
  if (c >= 0x3000 && c <= 0x303F && c != 0x3005) return true;// CJK punctuation
  if (c == 0x30FB) return true;                              // middle dot
  if (c >= 0xFF01 && c <= 0xFF0F) return true;               // fullwidth punct
  if (c >= 0xFF1A && c <= 0xFF20) return true;
  if (c >= 0xFF3B && c <= 0xFF40) return true;
  if (c >= 0xFF5B && c <= 0xFF65) return true;               // incl. halfwidth ｡｢｣､･
  if (c == 0x2018 || c == 0x2019 || c == 0x201C || c == 0x201D) return true;
  if (c == 0x2026 || c == 0x2025 || c == 0x2014 || c == 0x2015) return true;
  return false;
}

ScriptClass script_class(char32_t c) {
  if (is_kanji(c)) return ScriptClass::kKanji;
  if (is_hiragana(c)) return ScriptClass::kHiragana;
  if (is_katakana(c)) return ScriptClass::kKatakana;
  if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
      (c >= 0xFF21 && c <= 0xFF3A) || (c >= 0xFF41 && c <= 0xFF5A)) {
    return ScriptClass::kLatin;
  }
  if ((c >= '0' && c <= '9') || (c >= 0xFF10 && c <= 0xFF19)) return ScriptClass::kDigit;
  if (is_prolonged_mark(c)) return ScriptClass::kKatakana;
  if (is_punct_char(c)) return ScriptClass::kPunct;
  return ScriptClass::kOther;
}

namespace {

// Precomposed forms for base + U+3099 (voiced) and base + U+309A (semi-voiced).
// These are the only canonical compositions inside the kana blocks.
char32_t compose_kana(char32_t base, char32_t mark) {
  if (mark == 0x3099) {
    switch (base) {
      case U'か': return U'が'; case U'き': return U'ぎ'; case U'く': return U'ぐ';
      case U'け': return U'げ'; case U'こ': return U'ご';
      case U'さ': return U'ざ'; case U'し': return U'じ'; case U'す': return U'ず';
      case U'せ': return U'ぜ'; case U'そ': return U'ぞ';
      case U'た': return U'だ'; case U'ち': return U'ぢ'; case U'つ': return U'づ';
      case U'て': return U'で'; case U'と': return U'ど';
      case U'は': return U'ば'; case U'ひ': return U'び'; case U'ふ': return U'ぶ';
      case U'へ': return U'べ'; case U'ほ': return U'ぼ';
      case U'う': return U'ゔ'; case U'ゝ': return U'ゞ';
      case U'カ': return U'ガ'; case U'キ': return U'ギ'; case U'ク': return U'グ';
      case U'ケ': return U'ゲ'; case U'コ': return U'ゴ';
      case U'サ': return U'ザ'; case U'シ': return U'ジ'; case U'ス': return U'ズ';
      case U'セ': return U'ゼ'; case U'ソ': return U'ゾ';
      case U'タ': return U'ダ'; case U'チ': return U'ヂ'; case U'ツ': return U'ヅ';
      case U'テ': return U'デ'; case U'ト': return U'ド';
      case U'ハ': return U'バ'; case U'ヒ': return U'ビ'; case U'フ': return U'ブ';
      case U'ヘ': return U'ベ'; case U'ホ': return U'ボ';
      case U'ウ': return U'ヴ'; case U'ワ': return U'ヷ'; case U'ヰ': return U'ヸ';
      case U'ヱ': return U'ヹ'; case U'ヲ': return U'ヺ'; case U'ヽ': return U'ヾ';
      default: return 0;
    }
  }
  if (mark == 0x309A) {
    switch (base) {
      case U'は': return U'ぱ'; case U'ひ': return U'ぴ'; case U'ふ': return U'ぷ';
      case U'へ': return U'ぺ'; case U'ほ': return U'ぽ';
      case U'ハ': return U'パ'; case U'ヒ': return U'ピ'; case U'フ': return U'プ';
      case U'ヘ': return U'ペ'; case U'ホ': return U'ポ';
      default: return 0;
    }
  }
  return 0;
}

// Half-width katakana U+FF66..U+FF9F to full-width. Indexed by c - 0xFF66.
constexpr std::array<char32_t, 58> kHalfKata = {
    U'ヲ', U'ァ', U'ィ', U'ゥ', U'ェ', U'ォ', U'ャ', U'ュ', U'ョ', U'ッ',
    U'ー', U'ア', U'イ', U'ウ', U'エ', U'オ', U'カ', U'キ', U'ク', U'ケ',
    U'コ', U'サ', U'シ', U'ス', U'セ', U'ソ', U'タ', U'チ', U'ツ', U'テ',
    U'ト', U'ナ', U'ニ', U'ヌ', U'ネ', U'ノ', U'ハ', U'ヒ', U'フ', U'ヘ',
    U'ホ', U'マ', U'ミ', U'ム', U'メ', U'モ', U'ヤ', U'ユ', U'ヨ', U'ラ',
    U'リ', U'ル', U'レ', U'ロ', U'ワ', U'ン', U'゙', U'゚'};

}  // namespace

std::u32string normalize_nfc(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if ((c == 0x3099 || c == 0x309A) && !out.empty()) {
      char32_t fused = compose_kana(out.back(), c);
      if (fused != 0) {
        out.back() = fused;
        continue;
      }
    }
    out.push_back(c);
  }
  return out;
}

std::u32string fold_widths(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (c == 0x3000) {
      out.push_back(U' ');
    } else if (c >= 0xFF01 && c <= 0xFF5E) {
      out.push_back(c - 0xFF01 + 0x21);  // fullwidth ASCII block
    } else if (c == 0xFF61) {
      out.push_back(U'。');
    } else if (c == 0xFF62) {
      out.push_back(U'「');
    } else if (c == 0xFF63) {
      out.push_back(U'」');
    } else if (c == 0xFF64) {
      out.push_back(U'、');
    } else if (c == 0xFF65) {
      out.push_back(U'・');
    } else if (c >= 0xFF66 && c <= 0xFF9F) {
      char32_t full = kHalfKata[c - 0xFF66];
      if (full == U'゙' || full == U'゚') {
        // Voicing mark: try to fuse with the previous katakana.
        char32_t mark = (full == U'゙') ? 0x3099 : 0x309A;
        if (!out.empty()) {
          char32_t fused = compose_kana(out.back(), mark);
          if (fused != 0) {
            out.back() = fused;
            continue;
          }
        }
        out.push_back(mark);
      } else {
        out.push_back(full);
      }
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::u32string strip_punct(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (!is_punct_char(c)) out.push_back(c);
  }
  return out;
}

}  // namespace lenicer
