#ifndef LENICER_NGRAM_H_
#define LENICER_NGRAM_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>

// Character n-gram counts with add-k smoothing, used to rank kanji
// restoration candidates in context. Sentence boundaries are padded with
// sentinel scalars so every character, including end-of-line, is predicted
// from a full history.

namespace lenicer {

inline constexpr char32_t kBos = 0x0002;
inline constexpr char32_t kEos = 0x0003;

class NgramModel {
 public:
  explicit NgramModel(int order = 3) : order_(order) {}

  // Counts n-grams over each line padded with order-1 BOS scalars and one
  // EOS. Lines are NFC-normalized; tabs and control characters are dropped.
  // Throws EmptyCorpusError when no line contributes any gram.
  static NgramModel train(std::istream& corpus, int order = 3);
  static NgramModel train_file(const std::string& path, int order = 3);

  // TSV persistence: gram TAB count, one gram per line.
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static NgramModel load(std::istream& in);
  static NgramModel load_file(const std::string& path);

  int order() const { return order_; }
  uint64_t total_grams() const { return total_grams_; }
  uint64_t vocabulary_size() const { return vocab_.size(); }
  uint64_t count(const std::u32string& gram) const;

  // Negative log probability of the scalar following context, add-k
  // smoothed. context must have length order-1.
  double neg_log_prob(const std::u32string& context, char32_t next) const;

  // Sum of neg_log_prob over every n-gram window of the padded sentence
  // that overlaps [span_begin, span_end) (scalar offsets into the unpadded
  // sentence). This is the candidate scoring primitive.
  double score_span(std::u32string_view sentence, size_t span_begin, size_t span_end) const;

  static constexpr double kSmoothing = 0.1;

 private:
  void insert_gram(const std::u32string& gram, uint64_t count);

  int order_;
  std::unordered_map<std::u32string, uint64_t> counts_;         // full n-grams
  std::unordered_map<std::u32string, uint64_t> context_totals_; // (n-1)-gram prefixes
  std::unordered_map<char32_t, uint64_t> vocab_;
  uint64_t total_grams_ = 0;
};

}  // namespace lenicer

#endif  // LENICER_NGRAM_H_
