// Python bindings for the core operations: lattice scoring, kana
// conversion, segmentation, restoration, and corpus evaluation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <sstream>

#include "lenicer/builder.h"
#include "lenicer/edit_distance.h"
#include "lenicer/errors.h"
#include "lenicer/eval.h"
#include "lenicer/kana.h"
#include "lenicer/lexicon.h"
#include "lenicer/ngram.h"
#include "lenicer/restorer.h"
#include "lenicer/segmenter.h"
#include "lenicer/unicode.h"

namespace py = pybind11;
using namespace lenicer;

namespace {

const char* op_name(EditOp op) {
  switch (op) {
    case EditOp::kMatch: return "match";
    case EditOp::kSubstitution: return "sub";
    case EditOp::kInsertion: return "ins";
    case EditOp::kDeletion: return "del";
  }
  return "?";
}

StageConfig make_stages(const std::vector<std::string>& stages, int max_candidates,
                        double margin) {
  StageConfig config;
  for (const std::string& s : stages) {
    if (s == "kana") {
      config.kana = true;
    } else if (s == "kanji") {
      config.kanji = true;
    } else if (s == "lexicon") {
      config.lexicon = true;
    } else if (s != "raw") {
      throw std::invalid_argument("unknown stage: " + s);
    }
  }
  config.restorer.max_candidates = max_candidates;
  config.restorer.margin = margin;
  config.validate();
  return config;
}

py::dict metric_to_dict(const MetricScore& s) {
  py::dict d;
  d["distance"] = s.distance;
  d["sub"] = s.substitutions;
  d["ins"] = s.insertions;
  d["del"] = s.deletions;
  d["denom"] = s.denominator;
  d["rate"] = s.rate;
  d["best_path"] = s.best_path;
  return d;
}

// Owns every resource so Python callers cannot create dangling references.
class Evaluator {
 public:
  Evaluator(const std::string& readings_path, const std::string& lexicon_path,
            const std::string& corpus_path, int order)
      : dict_(ReadingDictionary::load_file(readings_path)) {
    if (!lexicon_path.empty()) {
      lexicon_ = VariantLexicon::load_file(lexicon_path);
      has_lexicon_ = true;
    }
    if (!corpus_path.empty()) {
      model_ = NgramModel::train_file(corpus_path, order);
      has_model_ = true;
    }
  }

  BuildResources resources(const RestorerOptions& opt) {
    BuildResources r;
    r.dict = &dict_;
    if (has_lexicon_) r.lexicon = &lexicon_;
    if (has_model_) {
      restorer_ = std::make_unique<NgramRestorer>(dict_, model_, opt);
      r.restorer = restorer_.get();
    }
    return r;
  }

  Lattice build_lattice(const std::u32string& reference,
                        const std::vector<std::string>& stages, int max_candidates,
                        double margin) {
    StageConfig config = make_stages(stages, max_candidates, margin);
    return build_reference_lattice(reference, config, resources(config.restorer));
  }

  py::dict lenient(const std::u32string& reference, const std::u32string& hypothesis,
                   const std::vector<std::string>& stages, int max_candidates,
                   double margin) {
    StageConfig config = make_stages(stages, max_candidates, margin);
    return metric_to_dict(
        lenient_eval(reference, hypothesis, config, resources(config.restorer)));
  }

  py::dict wer(const std::u32string& reference, const std::u32string& hypothesis) {
    return metric_to_dict(naive_wer(reference, hypothesis, dict_));
  }

  std::string evaluate(const std::vector<std::tuple<std::string, std::string, std::string>>&
                           records,
                       const std::vector<std::string>& metrics,
                       const std::vector<std::string>& stages, int max_candidates,
                       double margin, int bootstrap, uint64_t seed, bool strip_punct,
                       bool nfkc, int jobs) {
    EvalOptions options;
    options.metrics = metrics;
    options.stages = make_stages(stages, max_candidates, margin);
    options.bootstrap_b = bootstrap;
    options.seed = seed;
    options.strip_punctuation = strip_punct;
    options.nfkc = nfkc;
    options.jobs = jobs;
    std::vector<UtteranceRecord> recs;
    recs.reserve(records.size());
    for (const auto& [id, ref, hyp] : records) recs.push_back({id, ref, hyp});
    EvalReport report = corpus_evaluate(recs, resources(options.stages.restorer), options);
    return report_to_json(report);
  }

  const ReadingDictionary& dict() const { return dict_; }
  const NgramModel* model() const { return has_model_ ? &model_ : nullptr; }

 private:
  ReadingDictionary dict_;
  VariantLexicon lexicon_;
  NgramModel model_;
  std::unique_ptr<NgramRestorer> restorer_;
  bool has_lexicon_ = false;
  bool has_model_ = false;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lenient Japanese ASR evaluation over respelling lattices";

  py::register_exception<EmptyLatticeError>(m, "EmptyLatticeError");
  py::register_exception<EmptyReferenceError>(m, "EmptyReferenceError");
  py::register_exception<NotConvertibleError>(m, "NotConvertibleError");
  py::register_exception<DuplicateSpellingError>(m, "DuplicateSpellingError");
  py::register_exception<MalformedLineError>(m, "MalformedLineError");
  py::register_exception<EmptyCorpusError>(m, "EmptyCorpusError");
  py::register_exception<NoValidRecordsError>(m, "NoValidRecordsError");

  py::class_<LexWeight>(m, "LexWeight")
      .def(py::init([](double edit, double lm) { return LexWeight{edit, lm}; }),
           py::arg("edit"), py::arg("lm"))
      .def_property_readonly("edit", [](const LexWeight& w) { return w.edit.value; })
      .def_property_readonly("lm", [](const LexWeight& w) { return w.lm.value; })
      .def("__repr__", [](const LexWeight& w) {
        std::ostringstream out;
        out << "LexWeight(edit=" << w.edit.value << ", lm=" << w.lm.value << ")";
        return out.str();
      });

  py::class_<Lattice>(m, "Lattice")
      .def(py::init<>())
      .def("add_state", &Lattice::add_state)
      .def("add_arc",
           [](Lattice& lat, int32_t src, const std::u32string& label, double edit,
              double lm, int32_t dst) {
             if (label.size() != 1) {
               throw std::invalid_argument("arc label must be a single character");
             }
             lat.add_arc(src, label[0], LexWeight{edit, lm}, dst);
           },
           py::arg("src"), py::arg("label"), py::arg("edit"), py::arg("lm"), py::arg("dst"))
      .def("set_final",
           [](Lattice& lat, int32_t state, double edit, double lm) {
             lat.set_final(state, LexWeight{edit, lm});
           },
           py::arg("state"), py::arg("edit") = 0.0, py::arg("lm") = 0.0)
      .def_property_readonly("num_states", &Lattice::num_states)
      .def_property_readonly("num_arcs", &Lattice::num_arcs)
      .def("to_text", &lattice_to_text)
      .def_static("from_text", [](const std::string& text) { return lattice_from_text(text); })
      .def("paths", [](const Lattice& lat) { return enumerate_paths(lat); });

  py::class_<EditResult>(m, "EditResult")
      .def_readonly("distance", &EditResult::distance)
      .def_readonly("substitutions", &EditResult::substitutions)
      .def_readonly("insertions", &EditResult::insertions)
      .def_readonly("deletions", &EditResult::deletions)
      .def_readonly("best_path", &EditResult::best_path)
      .def_property_readonly("best_path_lm",
                             [](const EditResult& r) { return r.best_path_lm.value; })
      .def_property_readonly("alignment", [](const EditResult& r) {
        py::list steps;
        for (const AlignStep& s : r.alignment) {
          py::object ref = s.ref ? py::cast(std::u32string(1, s.ref)) : py::none();
          py::object hyp = s.hyp ? py::cast(std::u32string(1, s.hyp)) : py::none();
          steps.append(py::make_tuple(op_name(s.op), ref, hyp));
        }
        return steps;
      });

  py::class_<Token>(m, "Token")
      .def_readonly("surface", &Token::surface)
      .def_readonly("reading", &Token::reading)
      .def_readonly("start", &Token::start)
      .def_readonly("end", &Token::end)
      .def_readonly("is_lexical", &Token::is_lexical)
      .def_readonly("reading_known", &Token::reading_known);

  py::class_<ReadingDictionary>(m, "ReadingDictionary")
      .def(py::init<>())
      .def_static("load", [](const std::string& path) {
        return ReadingDictionary::load_file(path);
      })
      .def("add", &ReadingDictionary::add, py::arg("surface"), py::arg("reading"),
           py::arg("frequency") = 1)
      .def("surfaces_for_reading", &ReadingDictionary::surfaces_for_reading)
      .def("__len__", &ReadingDictionary::size)
      .def("__contains__", &ReadingDictionary::contains);

  py::class_<VariantLexicon>(m, "VariantLexicon")
      .def_static("load", [](const std::string& path) {
        return VariantLexicon::load_file(path);
      })
      .def("variants_of", &VariantLexicon::variants_of)
      .def_property_readonly("num_classes", &VariantLexicon::num_classes);

  py::class_<NgramModel>(m, "NgramModel")
      .def_static("train",
                  [](const std::string& path, int order) {
                    return NgramModel::train_file(path, order);
                  },
                  py::arg("path"), py::arg("order") = 3)
      .def_static("load", [](const std::string& path) { return NgramModel::load_file(path); })
      .def("save", &NgramModel::save_file)
      .def_property_readonly("order", &NgramModel::order)
      .def_property_readonly("total_grams", &NgramModel::total_grams)
      .def_property_readonly("vocabulary_size", &NgramModel::vocabulary_size)
      .def("count", &NgramModel::count)
      .def("score_span", &NgramModel::score_span, py::arg("sentence"), py::arg("begin"),
           py::arg("end"));

  py::class_<Evaluator>(m, "Evaluator")
      .def(py::init<const std::string&, const std::string&, const std::string&, int>(),
           py::arg("readings"), py::arg("lexicon") = std::string(),
           py::arg("ngram_corpus") = std::string(), py::arg("order") = 3)
      .def("build_lattice", &Evaluator::build_lattice, py::arg("reference"),
           py::arg("stages") = std::vector<std::string>{"kana", "kanji", "lexicon"},
           py::arg("max_candidates") = 4, py::arg("margin") = 2.0)
      .def("lenient_cer", &Evaluator::lenient, py::arg("reference"), py::arg("hypothesis"),
           py::arg("stages") = std::vector<std::string>{"kana", "kanji", "lexicon"},
           py::arg("max_candidates") = 4, py::arg("margin") = 2.0)
      .def("wer", &Evaluator::wer, py::arg("reference"), py::arg("hypothesis"))
      .def("segment",
           [](const Evaluator& self, const std::u32string& text) {
             return segment_and_read(normalize_nfc(text), self.dict());
           })
      .def("restore",
           [](const Evaluator& self, const std::u32string& before,
              const std::u32string& token, const std::u32string& after,
              int max_candidates, double margin) {
             if (!self.model()) throw std::invalid_argument("no n-gram corpus was loaded");
             auto cands = restore({before, token, after}, self.dict(), *self.model(),
                                  {max_candidates, margin});
             py::list out;
             for (const Candidate& c : cands) out.append(py::make_tuple(c.surface, c.score));
             return out;
           },
           py::arg("before"), py::arg("token"), py::arg("after"),
           py::arg("max_candidates") = 4, py::arg("margin") = 2.0)
      .def("evaluate", &Evaluator::evaluate, py::arg("records"),
           py::arg("metrics") = std::vector<std::string>{"wer", "cer", "lenient"},
           py::arg("stages") = std::vector<std::string>{"kana", "kanji", "lexicon"},
           py::arg("max_candidates") = 4, py::arg("margin") = 2.0,
           py::arg("bootstrap") = 1000, py::arg("seed") = 1,
           py::arg("strip_punct") = false, py::arg("nfkc") = false, py::arg("jobs") = 1);

  m.def("hira_to_kata", [](const std::u32string& s) { return hira_to_kata(s); });
  m.def("kata_to_hira", [](const std::u32string& s) { return kata_to_hira(s); });
  m.def("nfc", [](const std::u32string& s) { return normalize_nfc(s); });
  m.def("fold_widths", [](const std::u32string& s) { return fold_widths(s); });
  m.def("serialize_tagged",
        [](const std::u32string& before, const std::u32string& token,
           const std::u32string& after) {
          return serialize_tagged({before, token, after});
        },
        py::arg("before"), py::arg("token"), py::arg("after"));
  m.def("string_lattice", [](const std::u32string& s) { return string_lattice(s); });
  m.def("shortest_distance", &shortest_distance);
  m.def("trim", &trim);
  m.def("edit_distance",
        [](const Lattice& lat, const std::u32string& hyp) { return edit_distance(lat, hyp); },
        py::arg("lattice"), py::arg("hypothesis"));
  m.def("lenient_cer",
        [](const Lattice& lat, const std::u32string& hyp) { return lenient_cer(lat, hyp); },
        py::arg("lattice"), py::arg("hypothesis"));
  m.def("naive_cer",
        [](const std::u32string& ref, const std::u32string& hyp) {
          return metric_to_dict(naive_cer(normalize_nfc(ref), normalize_nfc(hyp)));
        },
        py::arg("reference"), py::arg("hypothesis"));
}
