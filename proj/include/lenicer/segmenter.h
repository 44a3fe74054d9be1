#ifndef LENICER_SEGMENTER_H_
#define LENICER_SEGMENTER_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

// Reading dictionary and the greedy longest-match word segmenter. The
// dictionary stands in for a full morphological analyzer; a stronger
// segmenter can be plugged in by replacing segment_and_read's output.

namespace lenicer {

struct Token {
  std::u32string surface;
  std::u32string reading;     // hiragana (+ long mark), or == surface
  size_t start = 0;           // scalar offsets into the normalized reference
  size_t end = 0;
  bool is_lexical = false;    // false for punctuation, digits, Latin
  bool reading_known = false; // true when the reading came from the dictionary
};

struct LoadDiagnostic {
  size_t line = 0;
  std::string message;
};

class ReadingDictionary {
 public:
  struct Entry {
    std::u32string reading;
    int64_t frequency = 1;
    size_t file_order = 0;
  };

  // TSV: surface TAB reading TAB frequency. '#' lines are comments.
  // Rejected lines are reported through diagnostics, not fatal.
  static ReadingDictionary load(std::istream& in,
                                std::vector<LoadDiagnostic>* diagnostics = nullptr);
  static ReadingDictionary load_file(const std::string& path,
                                     std::vector<LoadDiagnostic>* diagnostics = nullptr);

  void add(std::u32string surface, std::u32string reading, int64_t frequency);

  bool contains(const std::u32string& surface) const {
    return entries_.count(surface) != 0;
  }
  // Entries for a surface, in file order. Empty vector when absent.
  const std::vector<Entry>& lookup(const std::u32string& surface) const;
  // Highest-frequency reading, ties broken by file order. Returns false
  // when the surface is unknown.
  bool best_reading(const std::u32string& surface, std::u32string* reading) const;
  // Surfaces whose reading equals the given hiragana string, sorted.
  std::vector<std::u32string> surfaces_for_reading(const std::u32string& reading) const;

  size_t size() const { return entries_.size(); }
  size_t max_surface_length() const { return max_surface_length_; }

 private:
  std::unordered_map<std::u32string, std::vector<Entry>> entries_;
  std::unordered_map<std::u32string, std::vector<std::u32string>> by_reading_;
  size_t max_surface_length_ = 0;
  size_t next_order_ = 0;
};

// Greedy longest-match segmentation of an NFC-normalized reference.
// Dictionary hits become tokens with their best reading; unmatched
// stretches are split at script-class boundaries and emitted as tokens
// whose reading is the surface itself (hiragana-folded for kana) with
// reading_known = false, so variant stages leave them alone.
std::vector<Token> segment_and_read(std::u32string_view reference,
                                    const ReadingDictionary& dict);

}  // namespace lenicer

#endif  // LENICER_SEGMENTER_H_
