#ifndef LENICER_RESTORER_H_
#define LENICER_RESTORER_H_

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "lenicer/ngram.h"
#include "lenicer/segmenter.h"

// Kanji restoration: given a kana token in sentence context, propose kanji
// respellings (or the token itself). The dictionary's inverse index bounds
// the candidate set; the n-gram model ranks candidates in context. An
// external model can be attached through the line protocol below.

namespace lenicer {

struct RestorationRequest {
  std::u32string before;  // context left of the token
  std::u32string token;   // kana token under consideration
  std::u32string after;   // context right of the token
};

struct Candidate {
  std::u32string surface;
  double score = 0.0;  // lower is better (negative log probability)
};

// Wire form consumed by external restorer plugins:
//   before<to_kanji>token</to_kanji>after
std::string serialize_tagged(const RestorationRequest& req);

struct RestorerOptions {
  int max_candidates = 4;
  double margin = 2.0;  // nats above the best score
};

// Candidate set is {token} plus every dictionary surface whose reading is
// exactly the token. Each candidate is scored by the n-gram cost of the
// sentence around the substitution window; candidates within margin of the
// best are returned, capped at max_candidates, sorted by (score, surface).
std::vector<Candidate> restore(const RestorationRequest& req,
                               const ReadingDictionary& dict,
                               const NgramModel& model,
                               const RestorerOptions& options = {});

// Backend interface so the statistical baseline and external plugins are
// interchangeable inside the lattice builder.
class RestorerBackend {
 public:
  virtual ~RestorerBackend() = default;
  virtual std::vector<Candidate> propose(const RestorationRequest& req) = 0;
};

class NgramRestorer : public RestorerBackend {
 public:
  NgramRestorer(const ReadingDictionary& dict, const NgramModel& model,
                RestorerOptions options)
      : dict_(dict), model_(model), options_(options) {}
  std::vector<Candidate> propose(const RestorationRequest& req) override {
    return restore(req, dict_, model_, options_);
  }

 private:
  const ReadingDictionary& dict_;
  const NgramModel& model_;
  RestorerOptions options_;
};

// Line-protocol adapter for an external restorer process. One tagged
// request per line on the child's stdin; the child answers with zero or
// more `surface TAB score` lines and a blank line to finish the response.
// Margin and cap are applied to the returned candidates; the identity
// candidate is added when the child omits it.
class ExternalRestorer : public RestorerBackend {
 public:
  ExternalRestorer(const std::string& command, RestorerOptions options);
  ~ExternalRestorer() override;

  ExternalRestorer(const ExternalRestorer&) = delete;
  ExternalRestorer& operator=(const ExternalRestorer&) = delete;

  std::vector<Candidate> propose(const RestorationRequest& req) override;

 private:
  struct Process;
  std::unique_ptr<Process> process_;
  RestorerOptions options_;
  std::mutex mutex_;  // the pipe protocol is one request at a time
};

// Shared margin/cap/sort policy.
std::vector<Candidate> select_candidates(std::vector<Candidate> scored,
                                         const RestorerOptions& options);

}  // namespace lenicer

#endif  // LENICER_RESTORER_H_
