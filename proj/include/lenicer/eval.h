#ifndef LENICER_EVAL_H_
#define LENICER_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lenicer/builder.h"
#include "lenicer/edit_distance.h"

// Corpus-level evaluation: naive WER/CER against the raw reference, lenient
// CER against the staged respelling lattice, bootstrap confidence
// intervals, and machine-readable reports.

namespace lenicer {

struct UtteranceRecord {
  std::string id;
  std::string reference;   // UTF-8, normalized during evaluation
  std::string hypothesis;  // may be empty
};

struct MetricScore {
  int distance = 0;
  int substitutions = 0;
  int insertions = 0;
  int deletions = 0;
  int denominator = 0;       // characters or words
  double rate = 0.0;
  std::u32string best_path;  // selected reference path (lenient only)
};

struct UtteranceScore {
  std::string id;
  std::map<std::string, MetricScore> metrics;
};

struct CorpusMetric {
  int64_t distance = 0;
  int64_t substitutions = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;
  int64_t denominator = 0;
  double rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct ResourceInfo {
  std::string name;
  std::string path;
  std::string checksum;  // fnv1a64 of the file bytes
};

struct EvalOptions {
  std::vector<std::string> metrics = {"wer", "cer", "lenient"};
  StageConfig stages = StageConfig::full();
  int bootstrap_b = 1000;
  uint64_t seed = 1;
  bool strip_punctuation = false;
  bool nfkc = false;
  int jobs = 1;
  std::string dump_lattice_dir;  // one lattice text file per utterance when set
};

struct EvalReport {
  EvalOptions options;
  std::vector<ResourceInfo> resources;
  std::vector<std::string> warnings;       // rejected records etc.
  size_t records_scored = 0;
  size_t records_rejected = 0;
  std::map<std::string, CorpusMetric> corpus;
  std::vector<UtteranceScore> utterances;
};

// Unit-cost Levenshtein over scalar sequences with a deterministic
// alignment; the independent string-level route that raw-config lattice
// scoring must agree with.
EditResult string_edit_distance(std::u32string_view reference, std::u32string_view hypothesis);

// Character error rate against the raw reference string.
// Throws EmptyReferenceError on an empty reference.
MetricScore naive_cer(std::u32string_view reference, std::u32string_view hypothesis);

// Word error rate with both sides segmented by the same dictionary.
MetricScore naive_wer(std::u32string_view reference, std::u32string_view hypothesis,
                      const ReadingDictionary& dict);

// Lenient CER of one record under the staged lattice.
MetricScore lenient_eval(std::u32string_view reference, std::u32string_view hypothesis,
                         const StageConfig& config, const BuildResources& resources);

// Full pipeline over a corpus: per-utterance scores, micro-averaged corpus
// rates, and percentile-bootstrap 95% intervals (deterministic under seed,
// independent of the jobs setting). Throws NoValidRecordsError when every
// record is rejected.
EvalReport corpus_evaluate(const std::vector<UtteranceRecord>& records,
                           const BuildResources& resources, const EvalOptions& options,
                           const std::vector<ResourceInfo>& resource_info = {});

// Corpus file: id TAB reference TAB hypothesis, '#' comments. Records with
// a missing id or duplicate id are rejected with a diagnostic.
std::vector<UtteranceRecord> load_corpus(std::istream& in,
                                         std::vector<std::string>* warnings = nullptr);
std::vector<UtteranceRecord> load_corpus_file(const std::string& path,
                                              std::vector<std::string>* warnings = nullptr);

// Deterministic serializations: identical report structs produce identical
// bytes.
std::string report_to_json(const EvalReport& report);
std::string report_to_tsv(const EvalReport& report);

// FNV-1a 64-bit checksum of a file's bytes, as fixed-width hex.
std::string fnv1a64_file(const std::string& path);

}  // namespace lenicer

#endif  // LENICER_EVAL_H_
