#include "lenicer/lexicon.h"

#include <algorithm>
#include <fstream>
#include <istream>

#include "lenicer/errors.h"
#include "lenicer/unicode.h"

namespace lenicer {

VariantLexicon VariantLexicon::load(std::istream& in,
                                    std::vector<LoadDiagnostic>* diagnostics) {
  VariantLexicon lex;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::u32string> members;
    size_t start = 0;
    bool bad = false;
    while (start <= line.size()) {
      size_t tab = line.find('\t', start);
      std::string field = tab == std::string::npos ? line.substr(start)
                                                   : line.substr(start, tab - start);
      if (!field.empty()) {
        std::u32string member;
        try {
          member = normalize_nfc(utf8_decode(field));
        } catch (const std::exception&) {
          bad = true;
          break;
        }
        if (std::find(members.begin(), members.end(), member) == members.end()) {
          members.push_back(std::move(member));
        }
      }
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (bad) {
      if (diagnostics) diagnostics->push_back({line_no, "invalid UTF-8"});
      continue;
    }
    if (members.size() < 2) {
      if (diagnostics) {
        diagnostics->push_back({line_no, "class needs at least 2 distinct members"});
      }
      continue;
    }
    const size_t class_id = lex.classes_.size();
    for (const std::u32string& m : members) {
      auto [it, inserted] = lex.index_.insert({m, class_id});
      if (!inserted) {
        throw DuplicateSpellingError("line " + std::to_string(line_no) + ": spelling " +
                                     utf8_encode(m) + " already belongs to a class");
      }
    }
    lex.classes_.push_back(std::move(members));
  }
  return lex;
}

VariantLexicon VariantLexicon::load_file(const std::string& path,
                                         std::vector<LoadDiagnostic>* diagnostics) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open variant lexicon: " + path);
  return load(in, diagnostics);
}

std::vector<std::u32string> VariantLexicon::variants_of(const std::u32string& spelling) const {
  auto it = index_.find(spelling);
  if (it == index_.end()) return {spelling};
  return classes_[it->second];
}

std::string VariantLexicon::to_text() const {
  std::string out;
  for (const auto& members : classes_) {
    for (size_t i = 0; i < members.size(); ++i) {
      if (i) out += '\t';
      out += utf8_encode(members[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace lenicer
