#include "lenicer/restorer.h"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include "lenicer/unicode.h"

namespace lenicer {

std::string serialize_tagged(const RestorationRequest& req) {
  std::string out;
  out += utf8_encode(req.before);
  out += "<to_kanji>";
  out += utf8_encode(req.token);
  out += "</to_kanji>";
  out += utf8_encode(req.after);
  return out;
}

std::vector<Candidate> select_candidates(std::vector<Candidate> scored,
                                         const RestorerOptions& options) {
  std::sort(scored.begin(), scored.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.surface < b.surface;
  });
  std::vector<Candidate> out;
  if (scored.empty()) return out;
  const double cutoff = scored.front().score + options.margin;
  for (const Candidate& c : scored) {
    if (c.score > cutoff) break;
    if (static_cast<int>(out.size()) >= options.max_candidates) break;
    out.push_back(c);
  }
  return out;
}

std::vector<Candidate> restore(const RestorationRequest& req,
                               const ReadingDictionary& dict,
                               const NgramModel& model,
                               const RestorerOptions& options) {
  std::vector<std::u32string> surfaces = dict.surfaces_for_reading(req.token);
  if (std::find(surfaces.begin(), surfaces.end(), req.token) == surfaces.end()) {
    surfaces.push_back(req.token);  // identity candidate is always evaluated
  }
  std::vector<Candidate> scored;
  scored.reserve(surfaces.size());
  for (const std::u32string& surface : surfaces) {
    std::u32string sentence = req.before + surface + req.after;
    double score =
        model.score_span(sentence, req.before.size(), req.before.size() + surface.size());
    scored.push_back(Candidate{surface, score});
  }
  return select_candidates(std::move(scored), options);
}

// ---- External process adapter ----------------------------------------------

struct ExternalRestorer::Process {
  pid_t pid = -1;
  FILE* to_child = nullptr;
  FILE* from_child = nullptr;

  ~Process() {
    if (to_child) fclose(to_child);
    if (from_child) fclose(from_child);
    if (pid > 0) {
      int status = 0;
      waitpid(pid, &status, 0);
    }
  }
};

ExternalRestorer::ExternalRestorer(const std::string& command, RestorerOptions options)
    : process_(std::make_unique<Process>()), options_(options) {
  int to_pipe[2];
  int from_pipe[2];
  if (pipe(to_pipe) != 0 || pipe(from_pipe) != 0) {
    throw std::runtime_error("pipe() failed: " + std::string(strerror(errno)));
  }
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork() failed: " + std::string(strerror(errno)));
  if (pid == 0) {
    dup2(to_pipe[0], STDIN_FILENO);
    dup2(from_pipe[1], STDOUT_FILENO);
    close(to_pipe[0]); close(to_pipe[1]);
    close(from_pipe[0]); close(from_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_pipe[0]);
  close(from_pipe[1]);
  process_->pid = pid;
  process_->to_child = fdopen(to_pipe[1], "w");
  process_->from_child = fdopen(from_pipe[0], "r");
  if (!process_->to_child || !process_->from_child) {
    throw std::runtime_error("fdopen() failed for restorer command");
  }
}

ExternalRestorer::~ExternalRestorer() = default;

std::vector<Candidate> ExternalRestorer::propose(const RestorationRequest& req) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::string request = serialize_tagged(req);
  // Requests are line-framed; embedded newlines would desynchronize the
  // protocol.
  for (char& c : request) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  request += '\n';
  if (fwrite(request.data(), 1, request.size(), process_->to_child) != request.size() ||
      fflush(process_->to_child) != 0) {
    throw std::runtime_error("restorer command is not accepting input");
  }

  std::vector<Candidate> scored;
  char* line = nullptr;
  size_t cap = 0;
  bool saw_identity = false;
  while (true) {
    ssize_t len = getline(&line, &cap, process_->from_child);
    if (len < 0) {
      free(line);
      throw std::runtime_error("restorer command closed its output");
    }
    std::string text(line, static_cast<size_t>(len));
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.empty()) break;  // blank line terminates the response
    size_t tab = text.find('\t');
    if (tab == std::string::npos) continue;  // ignore malformed lines
    Candidate c;
    c.surface = utf8_decode(text.substr(0, tab));
    c.score = std::stod(text.substr(tab + 1));
    if (c.surface.empty()) continue;
    if (c.surface == req.token) saw_identity = true;
    scored.push_back(std::move(c));
  }
  free(line);
  if (!saw_identity) {
    double worst = 0.0;
    for (const Candidate& c : scored) worst = std::max(worst, c.score);
    scored.push_back(Candidate{req.token, worst});
  }
  return select_candidates(std::move(scored), options_);
}

}  // namespace lenicer
