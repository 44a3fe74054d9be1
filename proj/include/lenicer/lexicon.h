#ifndef LENICER_LEXICON_H_
#define LENICER_LEXICON_H_

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "lenicer/segmenter.h"  // LoadDiagnostic

// Safe spelling-equivalence classes: any member of a class may replace any
// other without looking at context. Classes are disjoint by construction;
// a spelling found in two classes is a load error, never a merge.

namespace lenicer {

class VariantLexicon {
 public:
  // One class per line, members tab-separated, '#' lines are comments.
  // Lines with fewer than two members are rejected with a diagnostic.
  // Throws DuplicateSpellingError when a spelling appears in two classes.
  static VariantLexicon load(std::istream& in,
                             std::vector<LoadDiagnostic>* diagnostics = nullptr);
  static VariantLexicon load_file(const std::string& path,
                                  std::vector<LoadDiagnostic>* diagnostics = nullptr);

  // The full class containing spelling (including spelling itself), or
  // {spelling} when unindexed.
  std::vector<std::u32string> variants_of(const std::u32string& spelling) const;

  size_t num_classes() const { return classes_.size(); }
  const std::vector<std::vector<std::u32string>>& classes() const { return classes_; }

  std::string to_text() const;

 private:
  std::vector<std::vector<std::u32string>> classes_;
  std::unordered_map<std::u32string, size_t> index_;
};

}  // namespace lenicer

#endif  // LENICER_LEXICON_H_
