#ifndef LENICER_UNICODE_H_
#define LENICER_UNICODE_H_

#include <string>
#include <string_view>

// UTF-8 <-> scalar conversion and the small slice of Unicode this library
// needs: script classification for Japanese text, canonical composition of
// kana voicing marks, and width folding for half-width katakana corpora.

namespace lenicer {

// Decodes UTF-8 into Unicode scalar values. Invalid sequences raise
// std::invalid_argument.
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(std::u32string_view s);
std::string utf8_encode(char32_t c);

// Script predicates.
bool is_hiragana(char32_t c);       // U+3041..U+3096 plus iteration marks
bool is_katakana(char32_t c);       // U+30A1..U+30FA plus iteration marks
bool is_kana(char32_t c);           // hiragana, katakana, or the long mark
bool is_kanji(char32_t c);          // CJK unified ideographs (+ext A, compat)
bool is_prolonged_mark(char32_t c); // U+30FC
bool is_lexical_char(char32_t c);   // kana or kanji
bool is_punct_char(char32_t c);     // whitespace, ASCII/CJK/fullwidth punctuation

// Character class used to split unmatched runs during segmentation.
enum class ScriptClass { kKanji, kHiragana, kKatakana, kLatin, kDigit, kPunct, kOther };
ScriptClass script_class(char32_t c);

// Canonical composition for Japanese text: combining voicing marks
// (U+3099, U+309A) are fused with the preceding kana when a precomposed
// scalar exists. Other scripts pass through unchanged.
std::u32string normalize_nfc(std::u32string_view s);

// Width folding for corpora that use half-width katakana or full-width
// ASCII: half-width katakana (with voicing marks) to full-width, full-width
// ASCII to ASCII, ideographic space to space. Apply before normalize_nfc.
std::u32string fold_widths(std::u32string_view s);

// Drops punctuation and whitespace scalars.
std::u32string strip_punct(std::u32string_view s);

}  // namespace lenicer

#endif  // LENICER_UNICODE_H_
