#include "lenicer/ngram.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "lenicer/errors.h"
#include "lenicer/unicode.h"

namespace lenicer {

namespace {

std::u32string pad_line(std::u32string_view line, int order) {
  std::u32string padded;
  padded.reserve(line.size() + order);
  padded.append(static_cast<size_t>(order - 1), kBos);
  padded.append(line);
  padded.push_back(kEos);
  return padded;
}

std::u32string clean_line(const std::string& raw) {
  std::u32string decoded = normalize_nfc(utf8_decode(raw));
  std::u32string out;
  out.reserve(decoded.size());
  for (char32_t c : decoded) {
    if (c == '\t' || c < 0x20 || c == 0x7F) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

NgramModel NgramModel::train(std::istream& corpus, int order) {
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  NgramModel model(order);
  std::string raw;
  while (std::getline(corpus, raw)) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::u32string line = clean_line(raw);
    if (line.empty()) continue;
    std::u32string padded = pad_line(line, order);
    for (size_t i = 0; i + order <= padded.size(); ++i) {
      model.insert_gram(padded.substr(i, order), 1);
    }
  }
  if (model.total_grams_ == 0) throw EmptyCorpusError("no usable lines in corpus");
  return model;
}

NgramModel NgramModel::train_file(const std::string& path, int order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus: " + path);
  return train(in, order);
}

void NgramModel::insert_gram(const std::u32string& gram, uint64_t count) {
  counts_[gram] += count;
  context_totals_[gram.substr(0, gram.size() - 1)] += count;
  vocab_[gram.back()] += count;
  total_grams_ += count;
}

void NgramModel::save(std::ostream& out) const {
  for (const auto& [gram, count] : counts_) {
    out << utf8_encode(gram) << '\t' << count << '\n';
  }
}

void NgramModel::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save(out);
}

NgramModel NgramModel::load(std::istream& in) {
  NgramModel model(0);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw MalformedLineError("line " + std::to_string(line_no) + ": expected gram TAB count");
    }
    std::u32string gram = utf8_decode(line.substr(0, tab));
    uint64_t count = std::stoull(line.substr(tab + 1));
    if (gram.empty() || count == 0) {
      throw MalformedLineError("line " + std::to_string(line_no) + ": empty gram or zero count");
    }
    if (model.order_ == 0) {
      model.order_ = static_cast<int>(gram.size());
    } else if (static_cast<int>(gram.size()) != model.order_) {
      throw MalformedLineError("line " + std::to_string(line_no) + ": inconsistent gram length");
    }
    model.insert_gram(gram, count);
  }
  if (model.order_ == 0) throw EmptyCorpusError("model file holds no grams");
  return model;
}

NgramModel NgramModel::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open n-gram model: " + path);
  return load(in);
}

uint64_t NgramModel::count(const std::u32string& gram) const {
  auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

double NgramModel::neg_log_prob(const std::u32string& context, char32_t next) const {
  const double k = kSmoothing;
  const double vocab = static_cast<double>(vocab_.size()) + 1.0;  // +1 for unseen
  auto ctx_it = context_totals_.find(context);
  const double ctx_total = ctx_it == context_totals_.end() ? 0.0
                                                           : static_cast<double>(ctx_it->second);
  std::u32string gram = context;
  gram.push_back(next);
  auto it = counts_.find(gram);
  const double c = it == counts_.end() ? 0.0 : static_cast<double>(it->second);
  return -std::log((c + k) / (ctx_total + k * vocab));
}

double NgramModel::score_span(std::u32string_view sentence, size_t span_begin,
                              size_t span_end) const {
  const size_t pad = static_cast<size_t>(order_) - 1;
  std::u32string padded = pad_line(sentence, order_);
  // Windows [i, i+order) in padded coordinates that overlap the span.
  const size_t pb = span_begin + pad;
  const size_t pe = span_end + pad;
  const size_t first = pb >= pad ? pb - pad : 0;
  double total = 0.0;
  for (size_t i = first; i + order_ <= padded.size() && i < pe; ++i) {
    total += neg_log_prob(padded.substr(i, pad), padded[i + pad]);
  }
  return total;
}

}  // namespace lenicer
