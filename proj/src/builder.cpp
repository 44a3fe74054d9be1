#include "lenicer/builder.h"

#include <algorithm>
#include <stdexcept>

#include "lenicer/errors.h"
#include "lenicer/kana.h"
#include "lenicer/unicode.h"

namespace lenicer {

void StageConfig::validate() const {
  if (kanji && !kana) {
    throw std::invalid_argument("the kanji stage requires the kana stage");
  }
  if (kanji) {
    if (restorer.max_candidates < 1) {
      throw std::invalid_argument("max_candidates must be >= 1");
    }
    if (restorer.margin < 0.0) throw std::invalid_argument("margin must be >= 0");
  }
}

namespace {

void add_spelling(std::vector<std::u32string>& spellings, const std::u32string& s) {
  if (s.empty()) return;
  if (std::find(spellings.begin(), spellings.end(), s) == spellings.end()) {
    spellings.push_back(s);
  }
}

bool all_kana(std::u32string_view s) {
  if (s.empty()) return false;
  for (char32_t c : s) {
    if (!is_kana(c)) return false;
  }
  return true;
}

}  // namespace

std::vector<TokenVariants> build_token_variants(const std::vector<Token>& tokens,
                                                const StageConfig& config,
                                                const BuildResources& resources) {
  config.validate();
  std::vector<TokenVariants> out;
  out.reserve(tokens.size());

  // The restoration context is the original reference, not other slots'
  // variants.
  std::u32string reference;
  for (const Token& t : tokens) reference += t.surface;

  for (const Token& token : tokens) {
    TokenVariants tv;
    tv.token = token;
    tv.spellings.push_back(token.surface);

    const bool eligible = token.is_lexical && token.reading_known;
    if (config.kana && eligible) {
      add_spelling(tv.spellings, token.reading);
      if (is_hiragana_convertible(token.reading)) {
        add_spelling(tv.spellings, hira_to_kata(token.reading));
      }
      // The reading covers the hiragana side; an all-katakana surface also
      // yields its hiragana form via the reading, so both kana-kana
      // directions are present.
    }
    if (config.kanji && eligible && resources.restorer) {
      // Restoration applies to each kana spelling accumulated so far.
      const std::vector<std::u32string> kana_spellings(tv.spellings.begin(),
                                                       tv.spellings.end());
      for (const std::u32string& spelling : kana_spellings) {
        if (!all_kana(spelling)) continue;
        RestorationRequest req;
        req.before = reference.substr(0, token.start);
        req.token = spelling;
        req.after = reference.substr(token.end);
        try {
          for (const Candidate& c : resources.restorer->propose(req)) {
            add_spelling(tv.spellings, c.surface);
          }
        } catch (const std::exception&) {
          // A restorer failure degrades this token to fewer variants.
        }
      }
    }
    if (config.lexicon && token.is_lexical && resources.lexicon) {
      const std::vector<std::u32string> base(tv.spellings.begin(), tv.spellings.end());
      for (const std::u32string& spelling : base) {
        for (const std::u32string& v : resources.lexicon->variants_of(spelling)) {
          add_spelling(tv.spellings, v);
        }
      }
    }
    out.push_back(std::move(tv));
  }
  return out;
}

Lattice assemble_lattice(const std::vector<TokenVariants>& variants) {
  Lattice lattice;
  int32_t slot_start = lattice.add_state();
  for (const TokenVariants& tv : variants) {
    int32_t slot_end = lattice.add_state();
    for (const std::u32string& spelling : tv.spellings) {
      int32_t cur = slot_start;
      for (size_t i = 0; i < spelling.size(); ++i) {
        int32_t next = i + 1 == spelling.size() ? slot_end : lattice.add_state();
        lattice.add_arc(cur, spelling[i], LexWeight::one(), next);
        cur = next;
      }
    }
    slot_start = slot_end;
  }
  lattice.set_final(slot_start);
  return trim(lattice);
}

Lattice build_reference_lattice(std::u32string_view reference, const StageConfig& config,
                                const BuildResources& resources) {
  config.validate();
  std::u32string normalized = normalize_nfc(reference);
  if (normalized.empty()) throw EmptyReferenceError("reference is empty");
  if (!resources.dict) throw std::invalid_argument("a reading dictionary is required");
  std::vector<Token> tokens = segment_and_read(normalized, *resources.dict);
  return assemble_lattice(build_token_variants(tokens, config, resources));
}

}  // namespace lenicer
