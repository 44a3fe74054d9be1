#include "lenicer/segmenter.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "lenicer/errors.h"
#include "lenicer/kana.h"
#include "lenicer/unicode.h"

namespace lenicer {

ReadingDictionary ReadingDictionary::load(std::istream& in,
                                          std::vector<LoadDiagnostic>* diagnostics) {
  ReadingDictionary dict;
  std::string line;
  size_t line_no = 0;
  auto reject = [&](const std::string& why) {
    if (diagnostics) diagnostics->push_back({line_no, why});
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      reject("expected 3 tab-separated fields");
      continue;
    }
    std::string surface_b = line.substr(0, t1);
    std::string reading_b = line.substr(t1 + 1, t2 - t1 - 1);
    std::string freq_b = line.substr(t2 + 1);
    if (surface_b.empty() || reading_b.empty()) {
      reject("empty surface or reading");
      continue;
    }
    int64_t freq = 0;
    try {
      size_t pos = 0;
      freq = std::stoll(freq_b, &pos);
      if (pos != freq_b.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      reject("bad frequency: " + freq_b);
      continue;
    }
    if (freq < 1) {
      reject("frequency must be >= 1");
      continue;
    }
    std::u32string surface, reading;
    try {
      surface = normalize_nfc(utf8_decode(surface_b));
      reading = normalize_nfc(utf8_decode(reading_b));
    } catch (const std::exception& e) {
      reject(e.what());
      continue;
    }
    if (!is_valid_reading(reading)) {
      reject("reading is not hiragana: " + reading_b);
      continue;
    }
    dict.add(std::move(surface), std::move(reading), freq);
  }
  return dict;
}

ReadingDictionary ReadingDictionary::load_file(const std::string& path,
                                               std::vector<LoadDiagnostic>* diagnostics) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open reading dictionary: " + path);
  return load(in, diagnostics);
}

void ReadingDictionary::add(std::u32string surface, std::u32string reading,
                            int64_t frequency) {
  max_surface_length_ = std::max(max_surface_length_, surface.size());
  auto& readings = by_reading_[reading];
  if (std::find(readings.begin(), readings.end(), surface) == readings.end()) {
    readings.push_back(surface);
  }
  entries_[std::move(surface)].push_back(Entry{std::move(reading), frequency, next_order_++});
}

const std::vector<ReadingDictionary::Entry>& ReadingDictionary::lookup(
    const std::u32string& surface) const {
  static const std::vector<Entry> kEmpty;
  auto it = entries_.find(surface);
  return it == entries_.end() ? kEmpty : it->second;
}

bool ReadingDictionary::best_reading(const std::u32string& surface,
                                     std::u32string* reading) const {
  auto it = entries_.find(surface);
  if (it == entries_.end()) return false;
  const Entry* best = nullptr;
  for (const Entry& e : it->second) {
    if (!best || e.frequency > best->frequency ||
        (e.frequency == best->frequency && e.file_order < best->file_order)) {
      best = &e;
    }
  }
  *reading = best->reading;
  return true;
}

std::vector<std::u32string> ReadingDictionary::surfaces_for_reading(
    const std::u32string& reading) const {
  auto it = by_reading_.find(reading);
  if (it == by_reading_.end()) return {};
  std::vector<std::u32string> out = it->second;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool any_lexical(std::u32string_view s) {
  for (char32_t c : s) {
    if (is_lexical_char(c)) return true;
  }
  return false;
}

// Hiragana-folded reading for a kana surface; surface itself when any
// scalar has no hiragana counterpart.
std::u32string kana_reading(std::u32string_view surface) {
  std::u32string out;
  out.reserve(surface.size());
  for (char32_t c : surface) {
    if (is_hiragana(c) || is_prolonged_mark(c)) {
      out.push_back(c);
    } else if (is_katakana(c) && (c >= 0x30A1 && c <= 0x30F6)) {
      out.push_back(c - 0x60);
    } else if (c == 0x30FD || c == 0x30FE) {
      out.push_back(c - 0x60);
    } else {
      return std::u32string(surface);
    }
  }
  return out;
}

// ScriptClass for run splitting, with the long mark glued to a preceding
// kana run so that readings like らーめん stay in one piece.
ScriptClass run_class(char32_t c, ScriptClass prev, bool has_prev) {
  ScriptClass sc = script_class(c);
  if (is_prolonged_mark(c) && has_prev &&
      (prev == ScriptClass::kHiragana || prev == ScriptClass::kKatakana)) {
    return prev;
  }
  return sc;
}

Token make_unmatched_token(std::u32string_view surface, size_t start) {
  Token t;
  t.surface = std::u32string(surface);
  t.start = start;
  t.end = start + surface.size();
  t.is_lexical = any_lexical(surface);
  t.reading_known = false;
  t.reading = t.is_lexical ? kana_reading(surface) : t.surface;
  return t;
}

}  // namespace

std::vector<Token> segment_and_read(std::u32string_view reference,
                                    const ReadingDictionary& dict) {
  std::vector<Token> tokens;
  const size_t n = reference.size();
  size_t i = 0;
  size_t run_start = std::u32string::npos;
  ScriptClass run_cls = ScriptClass::kOther;

  auto flush_run = [&](size_t end) {
    if (run_start == std::u32string::npos) return;
    tokens.push_back(make_unmatched_token(reference.substr(run_start, end - run_start),
                                          run_start));
    run_start = std::u32string::npos;
  };

  while (i < n) {
    // Longest dictionary match at i.
    size_t best_len = 0;
    const size_t cap = std::min(dict.max_surface_length(), n - i);
    for (size_t len = cap; len >= 1; --len) {
      if (dict.contains(std::u32string(reference.substr(i, len)))) {
        best_len = len;
        break;
      }
    }
    if (best_len > 0) {
      flush_run(i);
      Token t;
      t.surface = std::u32string(reference.substr(i, best_len));
      t.start = i;
      t.end = i + best_len;
      t.is_lexical = any_lexical(t.surface);
      t.reading_known = dict.best_reading(t.surface, &t.reading);
      tokens.push_back(std::move(t));
      i += best_len;
      continue;
    }
    const ScriptClass cls =
        run_class(reference[i], run_cls, run_start != std::u32string::npos);
    if (run_start == std::u32string::npos || cls != run_cls ||
        cls == ScriptClass::kPunct) {
      // Punctuation never merges into multi-character tokens.
      flush_run(i);
      run_start = i;
      run_cls = cls;
    }
    ++i;
  }
  flush_run(n);
  return tokens;
}

}  // namespace lenicer
