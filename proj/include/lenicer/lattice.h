#ifndef LENICER_LATTICE_H_
#define LENICER_LATTICE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lenicer/weights.h"

// Acyclic weighted character acceptor. State 0 is always the start state.
// Reference lattices built by this library carry <0, lm> arc weights; the
// edit dimension is reserved for edit costs added during scoring.

namespace lenicer {

inline constexpr char32_t kEpsilon = 0;

struct Arc {
  char32_t label = kEpsilon;  // Unicode scalar, or kEpsilon
  LexWeight weight;
  int32_t next_state = -1;
};

class Lattice {
 public:
  Lattice() = default;

  int32_t add_state() {
    arcs_.emplace_back();
    return static_cast<int32_t>(arcs_.size()) - 1;
  }
  void add_arc(int32_t src, char32_t label, LexWeight weight, int32_t dst) {
    arcs_[src].push_back(Arc{label, weight, dst});
  }
  void set_final(int32_t state, LexWeight weight = LexWeight::one()) {
    finals_.push_back({state, weight});
  }

  int32_t num_states() const { return static_cast<int32_t>(arcs_.size()); }
  size_t num_arcs() const;
  const std::vector<Arc>& arcs(int32_t state) const { return arcs_[state]; }
  const std::vector<std::pair<int32_t, LexWeight>>& finals() const { return finals_; }
  bool is_final(int32_t state) const;
  // Final weight of a state; LexWeight::zero() when not final.
  LexWeight final_weight(int32_t state) const;
  bool has_epsilon() const;

  // States in topological order. Throws std::invalid_argument on a cycle.
  std::vector<int32_t> topological_order() const;

 private:
  std::vector<std::vector<Arc>> arcs_;  // outgoing arcs per state
  std::vector<std::pair<int32_t, LexWeight>> finals_;
};

// Sum over all complete paths of the product of arc weights and the final
// weight; under the lexicographic order this is the minimum-cost path
// weight. Throws EmptyLatticeError when no complete path exists.
LexWeight shortest_distance(const Lattice& lattice);

// Removes states and arcs that are not on any start-to-final path, keeping
// the weighted path set intact. May return an empty lattice.
Lattice trim(const Lattice& lattice);

// Replaces epsilon arcs by direct arcs with the epsilon path weight folded
// in. Input must be acyclic; the result accepts the same weighted strings.
Lattice remove_epsilon(const Lattice& lattice);

// Convenience: single-path lattice for a string, with <0,0> arc weights.
Lattice string_lattice(std::u32string_view s);

// Text format, one record per line:
//   arc:   src TAB dst TAB label TAB edit,lm   (label is the character or <eps>)
//   final: state TAB edit,lm
// State 0 is the start state. UTF-8 throughout.
std::string lattice_to_text(const Lattice& lattice);
Lattice lattice_from_text(std::string_view text);

// All complete path label sequences, in no particular order. Intended for
// small lattices (tests, diagnostics); throws std::length_error beyond
// max_paths.
std::vector<std::u32string> enumerate_paths(const Lattice& lattice, size_t max_paths = 100000);

}  // namespace lenicer

#endif  // LENICER_LATTICE_H_
