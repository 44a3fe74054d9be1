#ifndef LENICER_BUILDER_H_
#define LENICER_BUILDER_H_

#include <string>
#include <string_view>
#include <vector>

#include "lenicer/lattice.h"
#include "lenicer/lexicon.h"
#include "lenicer/restorer.h"
#include "lenicer/segmenter.h"

// Staged construction of the respelling lattice for a reference
// transcription: per-token kana variants, kanji restoration, and lexicon
// equivalence classes, assembled into a sausage-shaped character lattice.

namespace lenicer {

struct StageConfig {
  bool kana = false;
  bool kanji = false;    // requires kana: restoration consumes readings
  bool lexicon = false;
  RestorerOptions restorer;

  static StageConfig raw() { return {}; }
  static StageConfig full() { return {true, true, true, {}}; }
  void validate() const;  // throws std::invalid_argument on kanji without kana
};

struct TokenVariants {
  Token token;
  std::vector<std::u32string> spellings;  // surface first, then insertion order
};

struct BuildResources {
  const ReadingDictionary* dict = nullptr;
  const VariantLexicon* lexicon = nullptr;
  RestorerBackend* restorer = nullptr;  // required when config.kanji is set
};

// Per-token spelling sets. Non-lexical tokens and tokens without a
// dictionary-confirmed reading keep their surface only. A stage failure on
// one token degrades that token, never the utterance.
std::vector<TokenVariants> build_token_variants(const std::vector<Token>& tokens,
                                                const StageConfig& config,
                                                const BuildResources& resources);

// Concatenates per-slot parallel branches; every spelling becomes a chain
// of single-character <0,0> arcs. The result is trim, epsilon-free, and
// acyclic, and its path set is the cross product of the slot spelling sets.
Lattice assemble_lattice(const std::vector<TokenVariants>& variants);

// NFC-normalize, segment, expand, assemble. Throws EmptyReferenceError when
// the normalized reference is empty.
Lattice build_reference_lattice(std::u32string_view reference, const StageConfig& config,
                                const BuildResources& resources);

}  // namespace lenicer

#endif  // LENICER_BUILDER_H_
