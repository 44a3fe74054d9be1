#ifndef LENICER_KANA_H_
#define LENICER_KANA_H_

#include <string>
#include <string_view>

// Hiragana <-> katakana conversion by codepoint offset. The long vowel mark
// is shared between the scripts and passes through unchanged.

namespace lenicer {

// True when every scalar is hiragana (U+3041..U+3096, U+309D, U+309E) or the
// long mark. Empty input converts to empty output.
bool is_hiragana_convertible(std::u32string_view s);

// True when every scalar is katakana with a hiragana counterpart
// (U+30A1..U+30F6, U+30FD, U+30FE) or the long mark. Excludes the archaic
// voiced forms U+30F7..U+30FA, which have no hiragana equivalents.
bool is_katakana_convertible(std::u32string_view s);

// Throws NotConvertibleError on scalars outside the convertible range.
std::u32string hira_to_kata(std::u32string_view s);
std::u32string kata_to_hira(std::u32string_view s);

// Valid content for a reading field: hiragana plus the long mark.
bool is_valid_reading(std::u32string_view s);

}  // namespace lenicer

#endif  // LENICER_KANA_H_
