// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lenicer/builder.h"
#include "lenicer/edit_distance.h"
#include "lenicer/eval.h"
#include "lenicer/kana.h"
#include "lenicer/weights.h"
#include "testing_support.h"

using namespace lenicer;
using namespace lenicer::testing;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%d] %-28s %s  (%s)\n", number, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

struct Fixtures {
  ReadingDictionary dict;
  VariantLexicon lexicon;
  NgramModel model;
  std::unique_ptr<NgramRestorer> restorer;
  BuildResources res;

  Fixtures() {
    const std::string dir = LENICER_DATA_DIR;
    dict = ReadingDictionary::load_file(dir + "/readings.tsv");
    lexicon = VariantLexicon::load_file(dir + "/lexicon.tsv");
    model = NgramModel::train_file(dir + "/toy_corpus.txt", 3);
    restorer = std::make_unique<NgramRestorer>(dict, model, RestorerOptions{});
    res.dict = &dict;
    res.lexicon = &lexicon;
    res.restorer = restorer.get();
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- 1. edit distance vs. exhaustive enumeration ---------------------------
void criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240811);
  int mismatches = 0;
  const int cases = 1200;
  for (int i = 0; i < cases; ++i) {
    Lattice lat = random_lattice(rng);
    std::u32string hyp = random_string(rng, 6, 5);
    if (edit_distance(lat, hyp).distance != oracle_lattice_distance(lat, hyp)) {
      ++mismatches;
    }
  }
  const double secs = seconds_since(start);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%d cases, %d mismatches, %.2fs", cases,
                mismatches, secs);
  report(1, "oracle-equivalence", mismatches == 0 && secs < 10.0, detail);
}

// --- 2. the ramen lattice --------------------------------------------------
void criterion_figure_lattice(Fixtures& f) {
  const std::u32string ref = u32("この拉麺はうまい。");
  auto tokens = segment_and_read(ref, f.dict);
  auto vars = build_token_variants(tokens, StageConfig::full(), f.res);

  std::set<std::u32string> ramen, umai;
  for (const TokenVariants& tv : vars) {
    if (tv.token.surface == u32("拉麺")) ramen.insert(tv.spellings.begin(), tv.spellings.end());
    if (tv.token.surface == u32("うまい")) umai.insert(tv.spellings.begin(), tv.spellings.end());
  }
  const std::set<std::u32string> want_ramen = {u32("拉麺"), u32("らーめん"), u32("ラーメン")};
  const std::set<std::u32string> want_umai = {u32("うまい"), u32("ウマイ"), u32("旨い"),
                                              u32("美味い")};

  Lattice lat = assemble_lattice(vars);
  const size_t paths = oracle_paths(lat).size();
  const double lenient = lenient_cer(lat, u32("この拉麺は美味い。"));
  const MetricScore naive = naive_cer(ref, u32("この拉麺は美味い。"));

  const bool pass = ramen == want_ramen && umai == want_umai && paths == 12 &&
                    lenient == 0.0 && naive.rate > 0.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "slots %zu/%zu ok=%d, paths=%zu, lenient=%.3f, naive=%.3f", ramen.size(),
                umai.size(), int(ramen == want_ramen && umai == want_umai), paths, lenient,
                naive.rate);
  report(2, "figure-lattice", pass, detail);
}

// --- 3. reported false-error pairs -----------------------------------------
void criterion_false_error_pairs(Fixtures& f) {
  struct Pair {
    const char* ref;
    const char* hyp;
    StageConfig config;
  };
  const std::vector<Pair> pairs = {
      {"みなさんごきげんよう", "皆さんご機嫌よう", {true, true, false, {}}},
      {"頑張れ", "がんばれ", {true, false, false, {}}},
      {"軟らかい設定になっています", "柔らかい設定になっています", StageConfig::full()},
  };
  bool pass = true;
  std::string detail;
  for (const Pair& p : pairs) {
    const std::u32string ref = u32(p.ref), hyp = u32(p.hyp);
    const double lenient =
        lenient_cer(build_reference_lattice(ref, p.config, f.res), hyp);
    const double naive = naive_cer(ref, hyp).rate;
    if (!(lenient == 0.0 && naive > 0.0)) pass = false;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s[%.3f/%.3f] ", p.ref, lenient, naive);
    detail += buf;
  }
  report(3, "false-error-pairs", pass, detail);
}

// --- 4. staged monotonicity on the bundled corpus ---------------------------
void criterion_monotonicity(Fixtures& f) {
  auto records = load_corpus_file(std::string(LENICER_DATA_DIR) + "/mini_corpus.tsv");
  const std::vector<StageConfig> chain = {StageConfig::raw(), {true, false, false, {}},
                                          {true, true, false, {}}, StageConfig::full()};
  std::vector<double> rates;
  double naive_rate = -1.0;
  bool raw_equals_naive = true;
  for (const StageConfig& config : chain) {
    EvalOptions opt;
    opt.metrics = {"cer", "lenient"};
    opt.stages = config;
    opt.bootstrap_b = 200;
    opt.seed = 11;
    EvalReport rep = corpus_evaluate(records, f.res, opt);
    rates.push_back(rep.corpus.at("lenient").rate);
    naive_rate = rep.corpus.at("cer").rate;
    if (!config.kana && rep.corpus.at("lenient").rate != naive_rate) {
      raw_equals_naive = false;
    }
    for (const UtteranceScore& u : rep.utterances) {
      if (!config.kana && u.metrics.at("lenient").rate != u.metrics.at("cer").rate) {
        raw_equals_naive = false;
      }
    }
  }
  bool non_increasing = true;
  for (size_t i = 1; i < rates.size(); ++i) {
    if (rates[i] > rates[i - 1]) non_increasing = false;
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "raw=%.4f +kana=%.4f +kanji=%.4f +lexicon=%.4f naive=%.4f raw==naive:%d",
                rates[0], rates[1], rates[2], rates[3], naive_rate, int(raw_equals_naive));
  report(4, "staged-monotonicity", non_increasing && raw_equals_naive, detail);
}

// --- 5. semiring axioms ------------------------------------------------------
void criterion_semiring_axioms() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> grid(0, 8);
  // Dyadic grid keeps double addition exact, so equality checks are sound.
  std::uniform_int_distribution<int> dyadic(0, 200);
  auto real = [&](std::mt19937_64& r) { return 0.25 * dyadic(r); };
  int violations = 0;
  const int triples = 10000;
  for (int i = 0; i < triples; ++i) {
    const TropicalWeight ta{real(rng)}, tb{real(rng)}, tc{real(rng)};
    if (plus(plus(ta, tb), tc) != plus(ta, plus(tb, tc))) ++violations;
    if (plus(ta, tb) != plus(tb, ta)) ++violations;
    if (times(times(ta, tb), tc) != times(ta, times(tb, tc))) ++violations;
    if (times(ta, plus(tb, tc)) != plus(times(ta, tb), times(ta, tc))) ++violations;
    if (times(plus(ta, tb), tc) != plus(times(ta, tc), times(tb, tc))) ++violations;
    if (plus(ta, TropicalWeight::zero()) != ta) ++violations;
    if (times(ta, TropicalWeight::one()) != ta) ++violations;
    if (times(ta, TropicalWeight::zero()) != TropicalWeight::zero()) ++violations;

    const LexWeight a{double(grid(rng)), double(grid(rng))};
    const LexWeight b{double(grid(rng)), double(grid(rng))};
    const LexWeight c{double(grid(rng)), double(grid(rng))};
    if (plus(plus(a, b), c) != plus(a, plus(b, c))) ++violations;
    if (plus(a, b) != plus(b, a)) ++violations;
    if (times(times(a, b), c) != times(a, times(b, c))) ++violations;
    if (times(a, plus(b, c)) != plus(times(a, b), times(a, c))) ++violations;
    if (times(plus(a, b), c) != plus(times(a, c), times(b, c))) ++violations;
    if (plus(a, LexWeight::zero()) != a) ++violations;
    if (times(a, LexWeight::one()) != a) ++violations;
    if (times(a, LexWeight::zero()) != LexWeight::zero()) ++violations;
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%d triples, %d violations", triples, violations);
  report(5, "semiring-axioms", violations == 0, detail);
}

// --- 6. kana conversion -------------------------------------------------------
void criterion_kana_round_trip() {
  std::u32string all;
  for (char32_t c = 0x3041; c <= 0x3096; ++c) all.push_back(c);
  all.push_back(0x309D);
  all.push_back(0x309E);
  all.push_back(0x30FC);
  bool pass = kata_to_hira(hira_to_kata(all)) == all;
  pass = pass && hira_to_kata(all).size() == all.size();
  pass = pass && hira_to_kata(u32("らーめん")) == u32("ラーメン");
  pass = pass && hira_to_kata(u32("だめ")) == u32("ダメ");
  char detail[96];
  std::snprintf(detail, sizeof(detail), "%zu scalars round-tripped", all.size());
  report(6, "kana-round-trip", pass, detail);
}

// --- 7. bootstrap calibration --------------------------------------------------
void criterion_ci_calibration() {
  // References use hiragana, substitutions use katakana, so the edit
  // distance equals the number of flipped positions and the generating
  // rate is exactly 0.1.
  const std::u32string ref_alphabet = u32("あいうえおかきくけこさしすせそたちつてと");
  const std::u32string err_alphabet = u32("アイウエオカキクケコサシスセソタチツテト");
  std::mt19937_64 rng(20250301);
  std::uniform_int_distribution<size_t> rpick(0, ref_alphabet.size() - 1);
  std::uniform_int_distribution<size_t> epick(0, err_alphabet.size() - 1);
  std::uniform_int_distribution<int> len(10, 20);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const int trials = 200;
  const int corpus_size = 500;
  const double truth = 0.1;
  int covered = 0;
  BuildResources no_resources;
  for (int t = 0; t < trials; ++t) {
    std::vector<UtteranceRecord> records;
    records.reserve(corpus_size);
    for (int i = 0; i < corpus_size; ++i) {
      const int n = len(rng);
      std::u32string ref, hyp;
      for (int k = 0; k < n; ++k) {
        const char32_t c = ref_alphabet[rpick(rng)];
        ref.push_back(c);
        hyp.push_back(coin(rng) < truth ? err_alphabet[epick(rng)] : c);
      }
      records.push_back({"s" + std::to_string(i), utf8_encode(ref), utf8_encode(hyp)});
    }
    EvalOptions opt;
    opt.metrics = {"cer"};
    opt.bootstrap_b = 600;
    opt.seed = 9000 + t;
    EvalReport rep = corpus_evaluate(records, no_resources, opt);
    const CorpusMetric& cm = rep.corpus.at("cer");
    if (cm.ci_lo <= truth && truth <= cm.ci_hi) ++covered;
  }
  const double coverage = 100.0 * covered / trials;

  // Determinism of report bytes under a fixed seed.
  std::vector<UtteranceRecord> one = {{"u1", "あいうえお", "あいウえお"},
                                      {"u2", "かきく", "かきく"}};
  EvalOptions opt;
  opt.metrics = {"cer"};
  opt.bootstrap_b = 300;
  opt.seed = 123;
  const std::string bytes_a = report_to_json(corpus_evaluate(one, no_resources, opt));
  const std::string bytes_b = report_to_json(corpus_evaluate(one, no_resources, opt));

  const bool pass = coverage >= 92.0 && coverage <= 98.0 && bytes_a == bytes_b;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "coverage %.1f%% over %d trials, deterministic=%d",
                coverage, trials, int(bytes_a == bytes_b));
  report(7, "ci-calibration", pass, detail);
}

// --- 8. throughput ---------------------------------------------------------------
void criterion_throughput(Fixtures& f) {
  auto seed_records = load_corpus_file(std::string(LENICER_DATA_DIR) + "/mini_corpus.tsv");
  std::vector<UtteranceRecord> records;
  records.reserve(1000);
  for (int i = 0; i < 1000; ++i) {
    const UtteranceRecord& base = seed_records[i % seed_records.size()];
    records.push_back({"t" + std::to_string(i), base.reference, base.hypothesis});
  }
  EvalOptions opt;
  opt.metrics = {"wer", "cer", "lenient"};
  opt.stages = StageConfig::full();
  opt.bootstrap_b = 1000;
  opt.seed = 3;
  opt.jobs = 1;

  const auto start = std::chrono::steady_clock::now();
  EvalReport serial = corpus_evaluate(records, f.res, opt);
  const double secs = seconds_since(start);

  opt.jobs = 4;
  EvalReport parallel = corpus_evaluate(records, f.res, opt);
  const bool identical = report_to_json(serial) == report_to_json(parallel);

  const bool pass = secs < 5.0 && identical;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "1000 utterances in %.2fs, parallel identical=%d",
                secs, int(identical));
  report(8, "throughput", pass, detail);
}

}  // namespace

int main() {
  Fixtures fixtures;
  criterion_oracle_equivalence();
  criterion_figure_lattice(fixtures);
  criterion_false_error_pairs(fixtures);
  criterion_monotonicity(fixtures);
  criterion_semiring_axioms();
  criterion_kana_round_trip();
  criterion_ci_calibration();
  criterion_throughput(fixtures);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
