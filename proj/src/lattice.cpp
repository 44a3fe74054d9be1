#include "lenicer/lattice.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lenicer/errors.h"
#include "lenicer/unicode.h"

namespace lenicer {

size_t Lattice::num_arcs() const {
  size_t n = 0;
  for (const auto& a : arcs_) n += a.size();
  return n;
}

bool Lattice::is_final(int32_t state) const {
  for (const auto& [s, w] : finals_) {
    if (s == state && !w.is_zero()) return true;
  }
  return false;
}

LexWeight Lattice::final_weight(int32_t state) const {
  LexWeight w = LexWeight::zero();
  for (const auto& [s, fw] : finals_) {
    if (s == state) w = plus(w, fw);
  }
  return w;
}

bool Lattice::has_epsilon() const {
  for (const auto& state_arcs : arcs_) {
    for (const Arc& a : state_arcs) {
      if (a.label == kEpsilon) return true;
    }
  }
  return false;
}

std::vector<int32_t> Lattice::topological_order() const {
  const int32_t n = num_states();
  std::vector<int32_t> indegree(n, 0);
  for (int32_t s = 0; s < n; ++s) {
    for (const Arc& a : arcs_[s]) {
      if (a.next_state < 0 || a.next_state >= n) {
        throw std::invalid_argument("arc points to a nonexistent state");
      }
      ++indegree[a.next_state];
    }
  }
  std::vector<int32_t> order;
  order.reserve(n);
  std::vector<int32_t> queue;
  for (int32_t s = 0; s < n; ++s) {
    if (indegree[s] == 0) queue.push_back(s);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int32_t s = queue[head];
    order.push_back(s);
    for (const Arc& a : arcs_[s]) {
      if (--indegree[a.next_state] == 0) queue.push_back(a.next_state);
    }
  }
  if (static_cast<int32_t>(order.size()) != n) {
    throw std::invalid_argument("lattice is cyclic");
  }
  return order;
}

LexWeight shortest_distance(const Lattice& lattice) {
  if (lattice.num_states() == 0) throw EmptyLatticeError("lattice has no states");
  const auto order = lattice.topological_order();
  std::vector<LexWeight> dist(lattice.num_states(), LexWeight::zero());
  dist[0] = LexWeight::one();
  LexWeight total = LexWeight::zero();
  for (int32_t s : order) {
    if (dist[s].is_zero()) continue;
    total = plus(total, times(dist[s], lattice.final_weight(s)));
    for (const Arc& a : lattice.arcs(s)) {
      dist[a.next_state] = plus(dist[a.next_state], times(dist[s], a.weight));
    }
  }
  if (total.is_zero()) throw EmptyLatticeError("lattice has no complete path");
  return total;
}

Lattice trim(const Lattice& lattice) {
  const int32_t n = lattice.num_states();
  if (n == 0) return Lattice();

  // Forward reachability from the start state.
  std::vector<bool> fwd(n, false);
  std::vector<int32_t> stack = {0};
  fwd[0] = true;
  while (!stack.empty()) {
    int32_t s = stack.back();
    stack.pop_back();
    for (const Arc& a : lattice.arcs(s)) {
      if (!fwd[a.next_state]) {
        fwd[a.next_state] = true;
        stack.push_back(a.next_state);
      }
    }
  }

  // Backward reachability from final states over reversed arcs.
  std::vector<std::vector<int32_t>> rev(n);
  for (int32_t s = 0; s < n; ++s) {
    for (const Arc& a : lattice.arcs(s)) rev[a.next_state].push_back(s);
  }
  std::vector<bool> bwd(n, false);
  for (const auto& [s, w] : lattice.finals()) {
    if (!w.is_zero() && !bwd[s]) {
      bwd[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    int32_t s = stack.back();
    stack.pop_back();
    for (int32_t p : rev[s]) {
      if (!bwd[p]) {
        bwd[p] = true;
        stack.push_back(p);
      }
    }
  }

  std::vector<int32_t> remap(n, -1);
  Lattice out;
  for (int32_t s = 0; s < n; ++s) {
    if (fwd[s] && bwd[s]) remap[s] = out.add_state();
  }
  if (remap[0] < 0) return Lattice();  // start cannot reach a final state
  for (int32_t s = 0; s < n; ++s) {
    if (remap[s] < 0) continue;
    for (const Arc& a : lattice.arcs(s)) {
      if (remap[a.next_state] >= 0) {
        out.add_arc(remap[s], a.label, a.weight, remap[a.next_state]);
      }
    }
  }
  for (const auto& [s, w] : lattice.finals()) {
    if (!w.is_zero() && remap[s] >= 0) out.set_final(remap[s], w);
  }
  return out;
}

Lattice remove_epsilon(const Lattice& lattice) {
  if (!lattice.has_epsilon()) return lattice;
  const int32_t n = lattice.num_states();
  const auto order = lattice.topological_order();

  // Epsilon closure per state, computed in reverse topological order:
  // closure(s) = {(s, one)} plus closure(t) through every eps arc s->t.
  std::vector<std::vector<std::pair<int32_t, LexWeight>>> closure(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int32_t s = *it;
    std::vector<LexWeight> acc(n, LexWeight::zero());
    acc[s] = LexWeight::one();
    for (const Arc& a : lattice.arcs(s)) {
      if (a.label != kEpsilon) continue;
      for (const auto& [t, w] : closure[a.next_state]) {
        acc[t] = plus(acc[t], times(a.weight, w));
      }
    }
    for (int32_t t = 0; t < n; ++t) {
      if (!acc[t].is_zero()) closure[s].push_back({t, acc[t]});
    }
  }

  Lattice out;
  for (int32_t s = 0; s < n; ++s) out.add_state();
  for (int32_t s = 0; s < n; ++s) {
    LexWeight fin = LexWeight::zero();
    for (const auto& [t, w] : closure[s]) {
      fin = plus(fin, times(w, lattice.final_weight(t)));
      for (const Arc& a : lattice.arcs(t)) {
        if (a.label != kEpsilon) {
          out.add_arc(s, a.label, times(w, a.weight), a.next_state);
        }
      }
    }
    if (!fin.is_zero()) out.set_final(s, fin);
  }
  return trim(out);
}

Lattice string_lattice(std::u32string_view s) {
  Lattice out;
  int32_t cur = out.add_state();
  for (char32_t c : s) {
    int32_t next = out.add_state();
    out.add_arc(cur, c, LexWeight::one(), next);
    cur = next;
  }
  out.set_final(cur);
  return out;
}

namespace {

std::string format_cost(double v) {
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_cost(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw MalformedLineError("bad cost value: " + s);
  return v;
}

LexWeight parse_weight(const std::string& field) {
  auto comma = field.find(',');
  if (comma == std::string::npos) throw MalformedLineError("bad weight field: " + field);
  return {parse_cost(field.substr(0, comma)), parse_cost(field.substr(comma + 1))};
}

}  // namespace

std::string lattice_to_text(const Lattice& lattice) {
  std::string out;
  for (int32_t s = 0; s < lattice.num_states(); ++s) {
    for (const Arc& a : lattice.arcs(s)) {
      out += std::to_string(s);
      out += '\t';
      out += std::to_string(a.next_state);
      out += '\t';
      out += a.label == kEpsilon ? std::string("<eps>") : utf8_encode(a.label);
      out += '\t';
      out += format_cost(a.weight.edit.value);
      out += ',';
      out += format_cost(a.weight.lm.value);
      out += '\n';
    }
  }
  for (const auto& [s, w] : lattice.finals()) {
    out += std::to_string(s);
    out += '\t';
    out += format_cost(w.edit.value);
    out += ',';
    out += format_cost(w.lm.value);
    out += '\n';
  }
  return out;
}

Lattice lattice_from_text(std::string_view text) {
  Lattice out;
  auto ensure_state = [&out](int32_t s) {
    while (out.num_states() <= s) out.add_state();
  };
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() == 2) {
      int32_t s = std::stoi(fields[0]);
      ensure_state(s);
      out.set_final(s, parse_weight(fields[1]));
    } else if (fields.size() == 4) {
      int32_t src = std::stoi(fields[0]);
      int32_t dst = std::stoi(fields[1]);
      ensure_state(std::max(src, dst));
      char32_t label = kEpsilon;
      if (fields[2] != "<eps>") {
        std::u32string decoded = utf8_decode(fields[2]);
        if (decoded.size() != 1) {
          throw MalformedLineError("line " + std::to_string(line_no) +
                                   ": label must be a single character");
        }
        label = decoded[0];
      }
      out.add_arc(src, label, parse_weight(fields[3]), dst);
    } else {
      throw MalformedLineError("line " + std::to_string(line_no) +
                               ": expected 2 or 4 tab-separated fields");
    }
  }
  return out;
}

std::vector<std::u32string> enumerate_paths(const Lattice& lattice, size_t max_paths) {
  std::vector<std::u32string> paths;
  if (lattice.num_states() == 0) return paths;
  lattice.topological_order();  // cycle check; enumeration recurses
  std::u32string prefix;
  auto walk = [&](auto&& self, int32_t s) -> void {
    if (lattice.is_final(s)) {
      if (paths.size() >= max_paths) throw std::length_error("too many paths to enumerate");
      paths.push_back(prefix);
    }
    for (const Arc& a : lattice.arcs(s)) {
      if (a.label != kEpsilon) prefix.push_back(a.label);
      self(self, a.next_state);
      if (a.label != kEpsilon) prefix.pop_back();
    }
  };
  walk(walk, 0);
  return paths;
}

}  // namespace lenicer
