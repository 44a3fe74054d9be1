// Command-line front end: corpus evaluation and n-gram model training.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lenicer/errors.h"
#include "lenicer/eval.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitNoRecords = 3;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_eval(const std::string& corpus_path, const std::string& metrics_csv,
             const std::string& stages_csv, const std::string& readings_path,
             const std::string& lexicon_path, const std::string& ngram_path,
             const std::string& restorer_cmd, int max_candidates, double margin,
             int bootstrap, uint64_t seed, bool strip_punct_flag, bool nfkc,
             const std::string& dump_dir, const std::string& out_path,
             const std::string& tsv_path, int jobs, bool lexicon_report) {
  lenicer::EvalOptions options;
  options.metrics = split_list(metrics_csv);
  if (options.metrics.empty()) {
    std::cerr << "no metrics requested\n";
    return kExitUsage;
  }

  lenicer::StageConfig stages;
  for (const std::string& s : split_list(stages_csv)) {
    if (s == "kana") {
      stages.kana = true;
    } else if (s == "kanji") {
      stages.kanji = true;
    } else if (s == "lexicon") {
      stages.lexicon = true;
    } else if (s == "raw") {
      // explicit "no augmentation"
    } else {
      std::cerr << "unknown stage: " << s << "\n";
      return kExitUsage;
    }
  }
  stages.restorer.max_candidates = max_candidates;
  stages.restorer.margin = margin;
  try {
    stages.validate();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  options.stages = stages;
  options.bootstrap_b = bootstrap;
  options.seed = seed;
  options.strip_punctuation = strip_punct_flag;
  options.nfkc = nfkc;
  options.jobs = jobs;
  options.dump_lattice_dir = dump_dir;

  lenicer::ReadingDictionary dict;
  lenicer::VariantLexicon lexicon;
  lenicer::NgramModel model;
  std::unique_ptr<lenicer::RestorerBackend> restorer;
  lenicer::BuildResources resources;
  std::vector<lenicer::ResourceInfo> info;

  try {
    if (!readings_path.empty()) {
      std::vector<lenicer::LoadDiagnostic> diags;
      dict = lenicer::ReadingDictionary::load_file(readings_path, &diags);
      for (const auto& d : diags) {
        std::cerr << "readings:" << d.line << ": " << d.message << "\n";
      }
      resources.dict = &dict;
      info.push_back({"readings", readings_path, lenicer::fnv1a64_file(readings_path)});
    }
    if (!lexicon_path.empty()) {
      std::vector<lenicer::LoadDiagnostic> diags;
      lexicon = lenicer::VariantLexicon::load_file(lexicon_path, &diags);
      if (lexicon_report) {
        nlohmann::ordered_json rejected = nlohmann::ordered_json::array();
        for (const auto& d : diags) {
          rejected.push_back({{"line", d.line}, {"message", d.message}});
        }
        std::cout << nlohmann::ordered_json{{"rejected_lines", rejected}}.dump() << "\n";
      } else {
        for (const auto& d : diags) {
          std::cerr << "lexicon:" << d.line << ": " << d.message << "\n";
        }
      }
      resources.lexicon = &lexicon;
      info.push_back({"lexicon", lexicon_path, lenicer::fnv1a64_file(lexicon_path)});
    }
    if (!restorer_cmd.empty()) {
      restorer = std::make_unique<lenicer::ExternalRestorer>(restorer_cmd, stages.restorer);
    } else if (!ngram_path.empty()) {
      model = lenicer::NgramModel::load_file(ngram_path);
      info.push_back({"ngram", ngram_path, lenicer::fnv1a64_file(ngram_path)});
      restorer = std::make_unique<lenicer::NgramRestorer>(dict, model, stages.restorer);
    }
    resources.restorer = restorer.get();
    const bool wants_lenient = std::count(options.metrics.begin(), options.metrics.end(),
                                          std::string("lenient")) > 0;
    if (wants_lenient && stages.kanji && !resources.restorer) {
      std::cerr << "the kanji stage needs --ngram or --restorer-cmd\n";
      return kExitResource;
    }
    for (const std::string& m : options.metrics) {
      if ((m == "wer" || m == "lenient") && !resources.dict) {
        std::cerr << "metric " << m << " needs --readings\n";
        return kExitResource;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  }

  std::vector<std::string> warnings;
  std::vector<lenicer::UtteranceRecord> records;
  try {
    records = lenicer::load_corpus_file(corpus_path, &warnings);
  } catch (const std::exception& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kExitResource;
  }
  for (const std::string& w : warnings) std::cerr << "corpus: " << w << "\n";

  lenicer::EvalReport report;
  try {
    report = lenicer::corpus_evaluate(records, resources, options, info);
  } catch (const lenicer::NoValidRecordsError& e) {
    std::cerr << e.what() << "\n";
    return kExitNoRecords;
  } catch (const std::exception& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitResource;
  }
  // Corpus-file warnings belong in the report next to record-level ones.
  report.warnings.insert(report.warnings.begin(), warnings.begin(), warnings.end());

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kExitResource;
  }
  out << lenicer::report_to_json(report);
  if (!tsv_path.empty()) {
    std::ofstream tsv(tsv_path, std::ios::binary);
    if (!tsv) {
      std::cerr << "cannot write " << tsv_path << "\n";
      return kExitResource;
    }
    tsv << lenicer::report_to_tsv(report);
  }

  for (const auto& [metric, cm] : report.corpus) {
    std::cout << metric << ": " << cm.rate << " [" << cm.ci_lo << ", " << cm.ci_hi
              << "] (" << cm.distance << "/" << cm.denominator << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lenient Japanese ASR evaluation with respelling lattices"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Score a corpus");
  std::string corpus_path, out_path, tsv_path, dump_dir;
  std::string metrics_csv = "wer,cer,lenient";
  std::string stages_csv = "kana,kanji,lexicon";
  std::string readings_path, lexicon_path, ngram_path, restorer_cmd;
  int max_candidates = 4;
  double margin = 2.0;
  int bootstrap = 1000;
  uint64_t seed = 1;
  int jobs = 1;
  bool strip_punct_flag = false, nfkc = false, lexicon_report = false;
  eval->add_option("--corpus", corpus_path, "TSV: id TAB reference TAB hypothesis")
      ->required();
  eval->add_option("--metrics", metrics_csv, "Comma list of wer,cer,lenient");
  eval->add_option("--stages", stages_csv, "Comma list of kana,kanji,lexicon (or raw)");
  eval->add_option("--readings", readings_path, "Reading dictionary TSV");
  eval->add_option("--lexicon", lexicon_path, "Spelling equivalence classes TSV");
  eval->add_option("--ngram", ngram_path, "Character n-gram model TSV");
  eval->add_option("--restorer-cmd", restorer_cmd,
                   "External restorer command (line protocol)");
  eval->add_option("--max-candidates", max_candidates, "Restoration candidates per token");
  eval->add_option("--margin", margin, "Score margin (nats) for restoration candidates");
  eval->add_option("--bootstrap", bootstrap, "Bootstrap resamples (>= 100)");
  eval->add_option("--seed", seed, "Bootstrap seed");
  eval->add_option("--jobs", jobs, "Worker threads");
  eval->add_flag("--strip-punct", strip_punct_flag, "Drop punctuation before scoring");
  eval->add_flag("--nfkc", nfkc, "Fold half-width katakana and full-width ASCII");
  eval->add_flag("--lexicon-report", lexicon_report,
                 "Print rejected lexicon lines as JSON");
  eval->add_option("--dump-lattice", dump_dir, "Directory for per-utterance lattice dumps");
  eval->add_option("--out", out_path, "JSON report path")->required();
  eval->add_option("--tsv", tsv_path, "TSV report path");

  // train-ngram
  auto* train = app.add_subcommand("train-ngram", "Count character n-grams from text");
  std::string train_corpus, train_out;
  int order = 3;
  train->add_option("--corpus", train_corpus, "Plain text, one sentence per line")
      ->required();
  train->add_option("--order", order, "N-gram order");
  train->add_option("--out", train_out, "Model TSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (eval->parsed()) {
    return run_eval(corpus_path, metrics_csv, stages_csv, readings_path, lexicon_path,
                    ngram_path, restorer_cmd, max_candidates, margin, bootstrap, seed,
                    strip_punct_flag, nfkc, dump_dir, out_path, tsv_path, jobs,
                    lexicon_report);
  }
  if (train->parsed()) {
    try {
      lenicer::NgramModel model = lenicer::NgramModel::train_file(train_corpus, order);
      model.save_file(train_out);
      std::cout << "grams: " << model.total_grams() << ", order: " << model.order()
                << ", vocabulary: " << model.vocabulary_size() << "\n";
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kExitResource;
    }
    return 0;
  }
  return kExitUsage;
}
