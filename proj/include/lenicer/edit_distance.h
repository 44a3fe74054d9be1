#ifndef LENICER_EDIT_DISTANCE_H_
#define LENICER_EDIT_DISTANCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "lenicer/lattice.h"
#include "lenicer/weights.h"

namespace lenicer {

enum class EditOp { kMatch, kSubstitution, kInsertion, kDeletion };

struct AlignStep {
  EditOp op;
  char32_t ref = 0;  // 0 when the op consumes no reference character
  char32_t hyp = 0;  // 0 when the op consumes no hypothesis character
};

struct EditResult {
  int distance = 0;
  int substitutions = 0;
  int insertions = 0;
  int deletions = 0;
  std::u32string best_path;      // labels of the selected reference path
  TropicalWeight best_path_lm;   // lm weight of that path (arcs + final)
  std::vector<AlignStep> alignment;
};

// Minimum unit-cost Levenshtein distance between the hypothesis and any
// complete path of the lattice, computed by dynamic programming over
// (state, hypothesis position) in topological order. Ties are broken by
// smaller lm weight, then longer reference path, then lexicographically
// smaller path labels. Epsilon arcs are removed on the fly; the edit
// dimension of arc weights is reserved for edit costs and must be 0.
EditResult edit_distance(const Lattice& lattice, std::u32string_view hypothesis);

// Lattice edit distance divided by the character count of the selected
// best-matching path. Throws EmptyReferenceError when that path is empty.
double lenient_cer(const Lattice& lattice, std::u32string_view hypothesis);

}  // namespace lenicer

#endif  // LENICER_EDIT_DISTANCE_H_
