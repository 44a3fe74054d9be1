#ifndef LENICER_WEIGHTS_H_
#define LENICER_WEIGHTS_H_

#include <limits>

// Tropical (min, +) weights and the <Tropical, Tropical> lexicographic pair
// used for lattice scoring. The first dimension of LexWeight holds edit
// costs, the second holds language-model costs.

namespace lenicer {

struct TropicalWeight {
  double value = 0.0;

  static constexpr TropicalWeight zero() {
    return {std::numeric_limits<double>::infinity()};
  }
  static constexpr TropicalWeight one() { return {0.0}; }

  bool is_zero() const { return value == std::numeric_limits<double>::infinity(); }

  friend TropicalWeight plus(TropicalWeight a, TropicalWeight b) {
    return {a.value < b.value ? a.value : b.value};
  }
  friend TropicalWeight times(TropicalWeight a, TropicalWeight b) {
    // inf + x must stay inf (zero annihilates), even against -inf-free inputs.
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.value + b.value};
  }
  friend bool operator==(TropicalWeight a, TropicalWeight b) { return a.value == b.value; }
  friend bool operator!=(TropicalWeight a, TropicalWeight b) { return !(a == b); }
  friend bool operator<(TropicalWeight a, TropicalWeight b) { return a.value < b.value; }
};

struct LexWeight {
  TropicalWeight edit;
  TropicalWeight lm;

  LexWeight() = default;
  LexWeight(TropicalWeight e, TropicalWeight l) : edit(e), lm(l) {}
  LexWeight(double e, double l) : edit{e}, lm{l} {}

  static LexWeight zero() { return {TropicalWeight::zero(), TropicalWeight::zero()}; }
  static LexWeight one() { return {TropicalWeight::one(), TropicalWeight::one()}; }

  bool is_zero() const { return edit.is_zero() && lm.is_zero(); }

  // Lexicographic min: compare the edit dimension first, then lm.
  friend LexWeight plus(const LexWeight& a, const LexWeight& b) {
    if (a.edit < b.edit) return a;
    if (b.edit < a.edit) return b;
    return a.lm < b.lm ? a : b;
  }
  friend LexWeight times(const LexWeight& a, const LexWeight& b) {
    return {times(a.edit, b.edit), times(a.lm, b.lm)};
  }
  friend bool operator==(const LexWeight& a, const LexWeight& b) {
    return a.edit == b.edit && a.lm == b.lm;
  }
  friend bool operator!=(const LexWeight& a, const LexWeight& b) { return !(a == b); }
  friend bool operator<(const LexWeight& a, const LexWeight& b) {
    if (a.edit < b.edit) return true;
    if (b.edit < a.edit) return false;
    return a.lm < b.lm;
  }
};

// Drops the edit dimension, keeping the language-model weight.
inline TropicalWeight project_lm(const LexWeight& w) { return w.lm; }

}  // namespace lenicer

#endif  // LENICER_WEIGHTS_H_
