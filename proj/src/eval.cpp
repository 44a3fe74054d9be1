#include "lenicer/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "lenicer/errors.h"
#include "lenicer/unicode.h"

namespace lenicer {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

// Counter-based generator: resample b, draw k is a pure function of the
// seed, so parallel bootstrap partitions the stream deterministically.
uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Generic unit-cost Levenshtein with a deterministic backtrace. Ops are
// relative to transforming the reference into the hypothesis.
template <typename Sym>
void levenshtein(const std::vector<Sym>& ref, const std::vector<Sym>& hyp, int* sub,
                 int* ins, int* del, std::vector<std::pair<EditOp, std::pair<int, int>>>* ops) {
  const size_t n = ref.size(), m = hyp.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      const int diag = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const int up = d[i - 1][j] + 1;    // deletion
      const int left = d[i][j - 1] + 1;  // insertion
      d[i][j] = std::min({diag, up, left});
    }
  }
  *sub = *ins = *del = 0;
  size_t i = n, j = m;
  std::vector<std::pair<EditOp, std::pair<int, int>>> rev;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        d[i][j] == d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1)) {
      const bool match = ref[i - 1] == hyp[j - 1];
      if (!match) ++*sub;
      rev.push_back({match ? EditOp::kMatch : EditOp::kSubstitution,
                     {static_cast<int>(i - 1), static_cast<int>(j - 1)}});
      --i; --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      ++*del;
      rev.push_back({EditOp::kDeletion, {static_cast<int>(i - 1), -1}});
      --i;
    } else {
      ++*ins;
      rev.push_back({EditOp::kInsertion, {-1, static_cast<int>(j - 1)}});
      --j;
    }
  }
  if (ops) {
    std::reverse(rev.begin(), rev.end());
    *ops = std::move(rev);
  }
}

std::u32string prepare_text(const std::string& raw, const EvalOptions& options) {
  std::u32string s = utf8_decode(raw);
  if (options.nfkc) s = fold_widths(s);
  s = normalize_nfc(s);
  if (options.strip_punctuation) s = strip_punct(s);
  return s;
}

std::string sanitize_id(const std::string& id) {
  std::string out = id;
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) c = '_';
  }
  return out;
}

double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.size() == 1) return sorted.front();
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const size_t lo = static_cast<size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - lo) * (sorted[lo + 1] - sorted[lo]);
}

std::string format_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

EditResult string_edit_distance(std::u32string_view reference, std::u32string_view hypothesis) {
  std::vector<char32_t> ref(reference.begin(), reference.end());
  std::vector<char32_t> hyp(hypothesis.begin(), hypothesis.end());
  EditResult r;
  std::vector<std::pair<EditOp, std::pair<int, int>>> ops;
  levenshtein(ref, hyp, &r.substitutions, &r.insertions, &r.deletions, &ops);
  r.distance = r.substitutions + r.insertions + r.deletions;
  r.best_path.assign(reference.begin(), reference.end());
  r.best_path_lm = TropicalWeight::one();
  for (const auto& [op, idx] : ops) {
    AlignStep step{op, 0, 0};
    if (idx.first >= 0) step.ref = ref[idx.first];
    if (idx.second >= 0) step.hyp = hyp[idx.second];
    r.alignment.push_back(step);
  }
  return r;
}

MetricScore naive_cer(std::u32string_view reference, std::u32string_view hypothesis) {
  if (reference.empty()) throw EmptyReferenceError("reference is empty");
  EditResult r = string_edit_distance(reference, hypothesis);
  MetricScore s;
  s.distance = r.distance;
  s.substitutions = r.substitutions;
  s.insertions = r.insertions;
  s.deletions = r.deletions;
  s.denominator = static_cast<int>(reference.size());
  s.rate = static_cast<double>(s.distance) / s.denominator;
  return s;
}

MetricScore naive_wer(std::u32string_view reference, std::u32string_view hypothesis,
                      const ReadingDictionary& dict) {
  if (reference.empty()) throw EmptyReferenceError("reference is empty");
  std::vector<std::u32string> ref_words, hyp_words;
  for (const Token& t : segment_and_read(reference, dict)) ref_words.push_back(t.surface);
  for (const Token& t : segment_and_read(hypothesis, dict)) hyp_words.push_back(t.surface);
  MetricScore s;
  levenshtein(ref_words, hyp_words, &s.substitutions, &s.insertions, &s.deletions, nullptr);
  s.distance = s.substitutions + s.insertions + s.deletions;
  s.denominator = static_cast<int>(ref_words.size());
  s.rate = static_cast<double>(s.distance) / s.denominator;
  return s;
}

namespace {

MetricScore lenient_from_lattice(const Lattice& lattice, std::u32string_view hypothesis) {
  EditResult r = edit_distance(lattice, hypothesis);
  if (r.best_path.empty()) throw EmptyReferenceError("best matching path is empty");
  MetricScore s;
  s.distance = r.distance;
  s.substitutions = r.substitutions;
  s.insertions = r.insertions;
  s.deletions = r.deletions;
  s.denominator = static_cast<int>(r.best_path.size());
  s.rate = static_cast<double>(s.distance) / s.denominator;
  s.best_path = std::move(r.best_path);
  return s;
}

}  // namespace

MetricScore lenient_eval(std::u32string_view reference, std::u32string_view hypothesis,
                         const StageConfig& config, const BuildResources& resources) {
  Lattice lattice = build_reference_lattice(reference, config, resources);
  return lenient_from_lattice(lattice, hypothesis);
}

std::vector<UtteranceRecord> load_corpus(std::istream& in,
                                         std::vector<std::string>* warnings) {
  std::vector<UtteranceRecord> records;
  std::unordered_map<std::string, size_t> seen;
  std::string line;
  size_t line_no = 0;
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const size_t t1 = line.find('\t');
    if (t1 == std::string::npos) {
      warn("expected id TAB reference [TAB hypothesis]");
      continue;
    }
    const size_t t2 = line.find('\t', t1 + 1);
    UtteranceRecord rec;
    rec.id = line.substr(0, t1);
    if (t2 == std::string::npos) {
      rec.reference = line.substr(t1 + 1);
    } else {
      rec.reference = line.substr(t1 + 1, t2 - t1 - 1);
      rec.hypothesis = line.substr(t2 + 1);
    }
    if (rec.id.empty()) {
      warn("empty utterance id");
      continue;
    }
    if (!seen.insert({rec.id, line_no}).second) {
      warn("duplicate utterance id " + rec.id + " (keeping the first)");
      continue;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<UtteranceRecord> load_corpus_file(const std::string& path,
                                              std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus: " + path);
  return load_corpus(in, warnings);
}

EvalReport corpus_evaluate(const std::vector<UtteranceRecord>& records,
                           const BuildResources& resources, const EvalOptions& options,
                           const std::vector<ResourceInfo>& resource_info) {
  if (options.bootstrap_b < 100) {
    throw std::invalid_argument("bootstrap resample count must be >= 100");
  }
  options.stages.validate();
  for (const std::string& m : options.metrics) {
    if (m != "wer" && m != "cer" && m != "lenient") {
      throw std::invalid_argument("unknown metric: " + m);
    }
    if ((m == "wer" || m == "lenient") && !resources.dict) {
      throw std::invalid_argument("metric " + m + " requires a reading dictionary");
    }
  }

  EvalReport report;
  report.options = options;
  report.resources = resource_info;

  // Normalize and validate records up front so scoring sees clean inputs.
  struct Prepared {
    const UtteranceRecord* rec = nullptr;
    std::u32string reference;
    std::u32string hypothesis;
  };
  std::vector<Prepared> prepared;
  prepared.reserve(records.size());
  for (const UtteranceRecord& rec : records) {
    Prepared p;
    p.rec = &rec;
    try {
      p.reference = prepare_text(rec.reference, options);
      p.hypothesis = prepare_text(rec.hypothesis, options);
    } catch (const std::exception& e) {
      report.warnings.push_back("record " + rec.id + ": " + e.what());
      continue;
    }
    if (p.reference.empty()) {
      report.warnings.push_back("record " + rec.id + ": empty reference, excluded");
      continue;
    }
    prepared.push_back(std::move(p));
  }
  if (prepared.empty()) throw NoValidRecordsError("no valid records in corpus");
  report.records_scored = prepared.size();
  report.records_rejected = records.size() - prepared.size();

  const bool want_wer = std::count(options.metrics.begin(), options.metrics.end(), "wer");
  const bool want_cer = std::count(options.metrics.begin(), options.metrics.end(), "cer");
  const bool want_lenient =
      std::count(options.metrics.begin(), options.metrics.end(), "lenient");

  report.utterances.resize(prepared.size());
  auto score_range = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const Prepared& p = prepared[i];
      UtteranceScore& out = report.utterances[i];
      out.id = p.rec->id;
      if (want_wer) out.metrics["wer"] = naive_wer(p.reference, p.hypothesis, *resources.dict);
      if (want_cer) out.metrics["cer"] = naive_cer(p.reference, p.hypothesis);
      if (want_lenient) {
        Lattice lattice = build_reference_lattice(p.reference, options.stages, resources);
        out.metrics["lenient"] = lenient_from_lattice(lattice, p.hypothesis);
        if (!options.dump_lattice_dir.empty()) {
          const std::string path =
              options.dump_lattice_dir + "/" + sanitize_id(p.rec->id) + ".lat";
          std::ofstream dump(path, std::ios::binary);
          if (!dump) throw std::runtime_error("cannot write lattice dump: " + path);
          dump << lattice_to_text(lattice);
        }
      }
    }
  };

  const size_t n = prepared.size();
  const int jobs = std::max(1, options.jobs);
  auto run_parallel = [jobs](size_t total, auto&& body) {
    if (jobs == 1 || total < 2) {
      body(size_t{0}, total);
      return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    const size_t chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const size_t begin = std::min(total, static_cast<size_t>(w) * chunk);
      const size_t end = std::min(total, begin + chunk);
      if (begin >= end) continue;
      workers.emplace_back([&, w, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : workers) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  };

  run_parallel(n, score_range);

  // Micro-averaged corpus rates and percentile-bootstrap intervals.
  for (const std::string& metric : options.metrics) {
    CorpusMetric cm;
    std::vector<int64_t> dists(n), denoms(n);
    for (size_t i = 0; i < n; ++i) {
      const MetricScore& s = report.utterances[i].metrics.at(metric);
      dists[i] = s.distance;
      denoms[i] = s.denominator;
      cm.distance += s.distance;
      cm.substitutions += s.substitutions;
      cm.insertions += s.insertions;
      cm.deletions += s.deletions;
      cm.denominator += s.denominator;
    }
    cm.rate = static_cast<double>(cm.distance) / static_cast<double>(cm.denominator);

    // All metrics share the same resample index streams (paired bootstrap).
    std::vector<double> rates(options.bootstrap_b);
    run_parallel(static_cast<size_t>(options.bootstrap_b), [&](size_t begin, size_t end) {
      for (size_t b = begin; b < end; ++b) {
        const uint64_t base = splitmix64(options.seed ^ splitmix64(b + 0x51ED270B));
        int64_t dist = 0, denom = 0;
        for (size_t k = 0; k < n; ++k) {
          const size_t idx = splitmix64(base + k) % n;
          dist += dists[idx];
          denom += denoms[idx];
        }
        rates[b] = static_cast<double>(dist) / static_cast<double>(denom);
      }
    });
    std::sort(rates.begin(), rates.end());
    cm.ci_lo = quantile(rates, 0.025);
    cm.ci_hi = quantile(rates, 0.975);
    report.corpus[metric] = cm;
  }
  return report;
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for checksum: " + path);
  uint64_t h = 0xCBF29CE484222325ULL;
  char buf[8192];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001B3ULL;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

namespace {

std::vector<std::string> stage_names(const StageConfig& c) {
  std::vector<std::string> out;
  if (c.kana) out.push_back("kana");
  if (c.kanji) out.push_back("kanji");
  if (c.lexicon) out.push_back("lexicon");
  return out;
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  ordered_json root;
  ordered_json config;
  config["metrics"] = report.options.metrics;
  config["stages"] = stage_names(report.options.stages);
  config["max_candidates"] = report.options.stages.restorer.max_candidates;
  config["margin"] = report.options.stages.restorer.margin;
  config["bootstrap"] = report.options.bootstrap_b;
  config["seed"] = report.options.seed;
  config["strip_punct"] = report.options.strip_punctuation;
  config["nfkc"] = report.options.nfkc;

  ordered_json resources = ordered_json::array();
  for (const ResourceInfo& r : report.resources) {
    resources.push_back({{"name", r.name}, {"path", r.path}, {"fnv1a64", r.checksum}});
  }

  root["metadata"] = {{"tool", "lenicer"},
                      {"version", kToolVersion},
                      {"config", config},
                      {"resources", resources},
                      {"records", {{"scored", report.records_scored},
                                   {"rejected", report.records_rejected}}},
                      {"warnings", report.warnings}};

  ordered_json corpus;
  for (const auto& [metric, cm] : report.corpus) {
    corpus[metric] = {{"errors", {{"sub", cm.substitutions},
                                  {"ins", cm.insertions},
                                  {"del", cm.deletions}}},
                      {"denom", cm.denominator},
                      {"rate", cm.rate},
                      {"ci95", {cm.ci_lo, cm.ci_hi}}};
  }
  root["corpus"] = corpus;

  ordered_json utterances = ordered_json::array();
  for (const UtteranceScore& u : report.utterances) {
    ordered_json entry;
    entry["id"] = u.id;
    for (const auto& [metric, s] : u.metrics) {
      ordered_json m;
      m["distance"] = s.distance;
      m["denom"] = s.denominator;
      m["rate"] = s.rate;
      if (metric == "lenient") m["best_path"] = utf8_encode(s.best_path);
      entry[metric] = m;
    }
    utterances.push_back(entry);
  }
  root["utterances"] = utterances;
  return root.dump(2) + "\n";
}

std::string report_to_tsv(const EvalReport& report) {
  std::string out = "# id\tmetric\tdistance\tsub\tins\tdel\tdenom\trate\tci_lo\tci_hi\n";
  for (const UtteranceScore& u : report.utterances) {
    for (const auto& [metric, s] : u.metrics) {
      out += u.id + '\t' + metric + '\t' + std::to_string(s.distance) + '\t' +
             std::to_string(s.substitutions) + '\t' + std::to_string(s.insertions) + '\t' +
             std::to_string(s.deletions) + '\t' + std::to_string(s.denominator) + '\t' +
             format_rate(s.rate) + "\t\t\n";
    }
  }
  for (const auto& [metric, cm] : report.corpus) {
    out += "__corpus__\t" + metric + '\t' + std::to_string(cm.distance) + '\t' +
           std::to_string(cm.substitutions) + '\t' + std::to_string(cm.insertions) + '\t' +
           std::to_string(cm.deletions) + '\t' + std::to_string(cm.denominator) + '\t' +
           format_rate(cm.rate) + '\t' + format_rate(cm.ci_lo) + '\t' +
           format_rate(cm.ci_hi) + '\n';
  }
  return out;
}

}  // namespace lenicer
