#include "lenicer/edit_distance.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lenicer/errors.h"

namespace lenicer {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-cell cost with the full tie-break order baked into operator<:
// smaller edit cost, then smaller lm cost, then more reference characters.
// Exact ties on all three fall back to a label-sequence comparison done by
// the caller via backpointer chains.
struct Cost {
  double edit = kInf;
  double lm = kInf;
  int32_t ref_len = 0;

  bool unreached() const { return edit == kInf; }
  friend bool operator<(const Cost& a, const Cost& b) {
    if (a.edit != b.edit) return a.edit < b.edit;
    if (a.lm != b.lm) return a.lm < b.lm;
    return a.ref_len > b.ref_len;
  }
  friend bool operator==(const Cost& a, const Cost& b) {
    return a.edit == b.edit && a.lm == b.lm && a.ref_len == b.ref_len;
  }
};

struct Back {
  int32_t prev = -1;  // flat cell index, -1 at the origin
  EditOp op = EditOp::kMatch;
  char32_t ref = 0;
  char32_t hyp = 0;
};

class LatticeEditDp {
 public:
  LatticeEditDp(const Lattice& lattice, std::u32string_view hyp)
      : lattice_(lattice), hyp_(hyp), width_(static_cast<int32_t>(hyp.size()) + 1) {
    cost_.resize(static_cast<size_t>(lattice.num_states()) * width_);
    back_.resize(cost_.size());
  }

  EditResult run() {
    const auto order = lattice_.topological_order();
    const int32_t m = width_ - 1;
    cost_[cell(0, 0)] = Cost{0.0, 0.0, 0};

    for (int32_t s : order) {
      // Insertions advance the hypothesis without consuming an arc.
      for (int32_t j = 1; j <= m; ++j) {
        const Cost& from = cost_[cell(s, j - 1)];
        if (from.unreached()) continue;
        relax(cell(s, j), Cost{from.edit + 1.0, from.lm, from.ref_len},
              Back{cell(s, j - 1), EditOp::kInsertion, 0, hyp_[j - 1]});
      }
      for (const Arc& a : lattice_.arcs(s)) {
        for (int32_t j = 0; j <= m; ++j) {
          const Cost& from = cost_[cell(s, j)];
          if (from.unreached()) continue;
          const double base_edit = from.edit + a.weight.edit.value;
          const double base_lm = from.lm + a.weight.lm.value;
          // Deletion: consume the reference character only.
          relax(cell(a.next_state, j),
                Cost{base_edit + 1.0, base_lm, from.ref_len + 1},
                Back{cell(s, j), EditOp::kDeletion, a.label, 0});
          if (j < m) {
            const bool match = a.label == hyp_[j];
            relax(cell(a.next_state, j + 1),
                  Cost{base_edit + (match ? 0.0 : 1.0), base_lm, from.ref_len + 1},
                  Back{cell(s, j), match ? EditOp::kMatch : EditOp::kSubstitution,
                       a.label, hyp_[j]});
          }
        }
      }
    }

    // Pick the best final cell, folding in final weights.
    int32_t best_cell = -1;
    Cost best;
    for (const auto& [f, fw] : lattice_.finals()) {
      if (fw.is_zero()) continue;
      const int32_t idx = cell(f, m);
      const Cost& c = cost_[idx];
      if (c.unreached()) continue;
      Cost total{c.edit + fw.edit.value, c.lm + fw.lm.value, c.ref_len};
      if (best_cell < 0 || total < best ||
          (total == best && ref_labels(idx) < ref_labels(best_cell))) {
        best_cell = idx;
        best = total;
      }
    }
    if (best_cell < 0) throw EmptyLatticeError("lattice has no complete path");
    return extract(best_cell, best.lm);
  }

 private:
  int32_t cell(int32_t state, int32_t j) const { return state * width_ + j; }

  void relax(int32_t idx, const Cost& cand, const Back& via) {
    Cost& cur = cost_[idx];
    if (cand < cur) {
      cur = cand;
      back_[idx] = via;
    } else if (cand == cur && tie_prefers(idx, via)) {
      back_[idx] = via;
    }
  }

  // On an exact cost tie, prefer the lexicographically smaller sequence of
  // reference labels. Both chains consume the same number of labels.
  bool tie_prefers(int32_t idx, const Back& via) {
    std::u32string incumbent = ref_labels(idx);
    std::u32string candidate = via.prev < 0 ? std::u32string() : ref_labels(via.prev);
    if (via.ref != 0) candidate.push_back(via.ref);
    return candidate < incumbent;
  }

  std::u32string ref_labels(int32_t idx) const {
    std::u32string labels;
    for (int32_t at = idx; back_[at].prev >= 0; at = back_[at].prev) {
      if (back_[at].ref != 0) labels.push_back(back_[at].ref);
    }
    std::reverse(labels.begin(), labels.end());
    return labels;
  }

  EditResult extract(int32_t final_cell, double total_lm) const {
    EditResult r;
    std::vector<AlignStep> rev;
    for (int32_t at = final_cell; back_[at].prev >= 0; at = back_[at].prev) {
      const Back& b = back_[at];
      rev.push_back(AlignStep{b.op, b.ref, b.hyp});
      switch (b.op) {
        case EditOp::kMatch: break;
        case EditOp::kSubstitution: ++r.substitutions; break;
        case EditOp::kInsertion: ++r.insertions; break;
        case EditOp::kDeletion: ++r.deletions; break;
      }
      if (b.ref != 0) r.best_path.push_back(b.ref);
    }
    std::reverse(rev.begin(), rev.end());
    std::reverse(r.best_path.begin(), r.best_path.end());
    r.alignment = std::move(rev);
    r.distance = r.substitutions + r.insertions + r.deletions;
    r.best_path_lm = TropicalWeight{total_lm};
    return r;
  }

  const Lattice& lattice_;
  std::u32string_view hyp_;
  int32_t width_;
  std::vector<Cost> cost_;
  std::vector<Back> back_;
};

}  // namespace

EditResult edit_distance(const Lattice& lattice, std::u32string_view hypothesis) {
  if (lattice.num_states() == 0) throw EmptyLatticeError("lattice has no states");
  if (lattice.has_epsilon()) {
    Lattice eps_free = remove_epsilon(lattice);
    if (eps_free.num_states() == 0) throw EmptyLatticeError("lattice has no complete path");
    LatticeEditDp dp(eps_free, hypothesis);
    return dp.run();
  }
  LatticeEditDp dp(lattice, hypothesis);
  return dp.run();
}

double lenient_cer(const Lattice& lattice, std::u32string_view hypothesis) {
  EditResult r = edit_distance(lattice, hypothesis);
  if (r.best_path.empty()) {
    throw EmptyReferenceError("best matching path has no characters");
  }
  return static_cast<double>(r.distance) / static_cast<double>(r.best_path.size());
}

}  // namespace lenicer
