#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "lenicer/builder.h"
#include "lenicer/edit_distance.h"
#include "lenicer/errors.h"
#include "testing_support.h"

using namespace lenicer;
using namespace lenicer::testing;

namespace {

struct Fixtures {
  ReadingDictionary dict;
  VariantLexicon lexicon;
  NgramModel model;
  std::unique_ptr<NgramRestorer> restorer;

  Fixtures() {
    const std::string dir = LENICER_DATA_DIR;
    dict = ReadingDictionary::load_file(dir + "/readings.tsv");
    lexicon = VariantLexicon::load_file(dir + "/lexicon.tsv");
    model = NgramModel::train_file(dir + "/toy_corpus.txt", 3);
    restorer = std::make_unique<NgramRestorer>(dict, model, RestorerOptions{});
  }

  BuildResources resources() {
    BuildResources r;
    r.dict = &dict;
    r.lexicon = &lexicon;
    r.restorer = restorer.get();
    return r;
  }
};

Fixtures& fixtures() {
  static Fixtures f;
  return f;
}

std::set<std::u32string> path_set(const Lattice& lat) {
  std::set<std::u32string> out;
  for (const OraclePath& p : oracle_paths(lat)) out.insert(p.labels);
  return out;
}

std::vector<std::u32string> slot_spellings(const std::vector<TokenVariants>& vars,
                                           const std::u32string& surface) {
  for (const TokenVariants& tv : vars) {
    if (tv.token.surface == surface) return tv.spellings;
  }
  return {};
}

}  // namespace

TEST_CASE("full stages reproduce the ramen lattice slots") {
  auto res = fixtures().resources();
  auto tokens = segment_and_read(u32("この拉麺はうまい。"), *res.dict);
  auto vars = build_token_variants(tokens, StageConfig::full(), res);
  REQUIRE(vars.size() == 5);

  auto ramen = slot_spellings(vars, u32("拉麺"));
  std::vector<std::u32string> want_ramen = {u32("拉麺"), u32("らーめん"), u32("ラーメン")};
  CHECK(ramen == want_ramen);

  auto umai = slot_spellings(vars, u32("うまい"));
  std::set<std::u32string> umai_set(umai.begin(), umai.end());
  std::set<std::u32string> want_umai = {u32("うまい"), u32("ウマイ"), u32("旨い"),
                                        u32("美味い")};
  CHECK(umai_set == want_umai);
  CHECK(umai.front() == u32("うまい"));  // surface first

  CHECK(slot_spellings(vars, u32("この")) == std::vector<std::u32string>{u32("この")});
  CHECK(slot_spellings(vars, u32("は")) == std::vector<std::u32string>{u32("は")});
  CHECK(slot_spellings(vars, u32("。")) == std::vector<std::u32string>{u32("。")});
}

TEST_CASE("raw config keeps every slot at its surface") {
  auto res = fixtures().resources();
  auto tokens = segment_and_read(u32("この拉麺はうまい。"), *res.dict);
  auto vars = build_token_variants(tokens, StageConfig::raw(), res);
  for (const TokenVariants& tv : vars) {
    CHECK(tv.spellings == std::vector<std::u32string>{tv.token.surface});
  }
}

TEST_CASE("assemble turns slots into concatenated branches") {
  TokenVariants a{Token{u32("a"), u32("a"), 0, 1, true, false}, {u32("a")}};
  TokenVariants b{Token{u32("b"), u32("b"), 1, 2, true, false}, {u32("b")}};
  Lattice single = assemble_lattice({a, b});
  CHECK(path_set(single) == std::set<std::u32string>{u32("ab")});

  TokenVariants dame{Token{u32("だめ"), u32("だめ"), 0, 2, true, false},
                     {u32("だめ"), u32("ダメ")}};
  Lattice two = assemble_lattice({dame});
  CHECK(path_set(two).size() == 2);
}

TEST_CASE("the ramen lattice has exactly twelve paths") {
  TokenVariants kono{Token{u32("この"), u32("この"), 0, 2, true, false}, {u32("この")}};
  TokenVariants ramen{Token{u32("拉麺"), u32("らーめん"), 2, 4, true, true},
                      {u32("拉麺"), u32("らーめん"), u32("ラーメン")}};
  TokenVariants ha{Token{u32("は"), u32("は"), 4, 5, true, false}, {u32("は")}};
  TokenVariants umai{Token{u32("うまい"), u32("うまい"), 5, 8, true, true},
                     {u32("うまい"), u32("ウマイ"), u32("旨い"), u32("美味い")}};
  TokenVariants maru{Token{u32("。"), u32("。"), 8, 9, false, false}, {u32("。")}};
  Lattice lat = assemble_lattice({kono, ramen, ha, umai, maru});
  auto paths = path_set(lat);
  CHECK(paths.size() == 12);
  CHECK(paths.count(u32("この拉麺はうまい。")) == 1);
  CHECK(paths.count(u32("このラーメンは美味い。")) == 1);
}

TEST_CASE("one substitution against the nine-character best path") {
  // Hypothesis この拉麺は美味し。 differs from the path この拉麺は美味い。 in one
  // character; the oracle minimum over all twelve paths agrees.
  auto res = fixtures().resources();
  Lattice lat = build_reference_lattice(u32("この拉麺はうまい。"), StageConfig::full(), res);
  const std::u32string hyp = u32("この拉麺は美味し。");
  int oracle_best = -1;
  for (const OraclePath& p : oracle_paths(lat)) {
    const int d = oracle_levenshtein(p.labels, hyp);
    if (oracle_best < 0 || d < oracle_best) oracle_best = d;
  }
  CHECK(oracle_best == 1);
  EditResult r = edit_distance(lat, hyp);
  CHECK(r.distance == 1);
  CHECK(r.best_path == u32("この拉麺は美味い。"));
  CHECK(lenient_cer(lat, hyp) == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("built lattices always contain the raw reference") {
  auto res = fixtures().resources();
  const std::vector<std::u32string> refs = {
      u32("この拉麺はうまい。"), u32("みなさんごきげんよう"), u32("頑張れ"),
      u32("下さい"), u32("猫がいます。"), u32("知らない言葉ばかり")};
  const std::vector<StageConfig> configs = {StageConfig::raw(), {true, false, false, {}},
                                            {true, true, false, {}}, StageConfig::full()};
  for (const auto& ref : refs) {
    for (const StageConfig& config : configs) {
      Lattice lat = build_reference_lattice(ref, config, res);
      CHECK(path_set(lat).count(ref) == 1);
      CHECK(edit_distance(lat, ref).distance == 0);
    }
  }
}

TEST_CASE("enabling more stages only grows the path set") {
  auto res = fixtures().resources();
  const std::vector<StageConfig> chain = {StageConfig::raw(), {true, false, false, {}},
                                          {true, true, false, {}}, StageConfig::full()};
  const std::vector<std::u32string> refs = {
      u32("この拉麺はうまい。"), u32("みなさんごきげんよう"), u32("軟らかい設定になっています"),
      u32("お引っ越しの日"), u32("だめだよ")};
  for (const auto& ref : refs) {
    std::set<std::u32string> prev;
    for (const StageConfig& config : chain) {
      auto cur = path_set(build_reference_lattice(ref, config, res));
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = std::move(cur);
    }
  }
}

TEST_CASE("path count is the product of slot sizes") {
  auto res = fixtures().resources();
  auto tokens = segment_and_read(u32("この拉麺はうまい。"), *res.dict);
  auto vars = build_token_variants(tokens, StageConfig::full(), res);
  size_t product = 1;
  for (const TokenVariants& tv : vars) product *= tv.spellings.size();
  Lattice lat = assemble_lattice(vars);
  CHECK(oracle_paths(lat).size() == product);
  CHECK(product == 12);
}

TEST_CASE("arc weights default to identity") {
  auto res = fixtures().resources();
  Lattice lat = build_reference_lattice(u32("この拉麺はうまい。"), StageConfig::full(), res);
  for (int32_t s = 0; s < lat.num_states(); ++s) {
    for (const Arc& a : lat.arcs(s)) {
      CHECK(a.weight == LexWeight::one());
    }
  }
}

TEST_CASE("building twice gives the same path set") {
  auto res = fixtures().resources();
  auto a = path_set(build_reference_lattice(u32("この拉麺はうまい。"), StageConfig::full(), res));
  auto b = path_set(build_reference_lattice(u32("この拉麺はうまい。"), StageConfig::full(), res));
  CHECK(a == b);
}

TEST_CASE("kanji restoration reaches the reported pairs") {
  auto res = fixtures().resources();
  StageConfig kanji{true, true, false, {}};
  CHECK(path_set(build_reference_lattice(u32("みなさんごきげんよう"), kanji, res))
            .count(u32("皆さんご機嫌よう")) == 1);
  CHECK(path_set(build_reference_lattice(u32("がんばれ"), kanji, res))
            .count(u32("頑張れ")) == 1);
  StageConfig kana{true, false, false, {}};
  CHECK(path_set(build_reference_lattice(u32("皆さんご機嫌よう"), kana, res))
            .count(u32("みなさんごきげんよう")) == 1);
}

TEST_CASE("the lexicon stage adds reading-independent spellings") {
  auto res = fixtures().resources();
  CHECK(path_set(build_reference_lattice(u32("気持ちがいい"), StageConfig::full(), res))
            .count(u32("気持がいい")) == 1);
  StageConfig no_lexicon{true, true, false, {}};
  CHECK(path_set(build_reference_lattice(u32("気持ちがいい"), no_lexicon, res))
            .count(u32("気持がいい")) == 0);
}

TEST_CASE("the lexicon stage combines with any other stage set") {
  auto res = fixtures().resources();
  StageConfig only_lexicon;
  only_lexicon.lexicon = true;
  auto paths = path_set(build_reference_lattice(u32("気持ちがいい"), only_lexicon, res));
  CHECK(paths.count(u32("気持がいい")) == 1);
  CHECK(paths.count(u32("きもちがいい")) == 0);  // no kana stage
}

TEST_CASE("non-lexical tokens never grow variants") {
  auto res = fixtures().resources();
  auto tokens = segment_and_read(u32("はい、２０円！"), *res.dict);
  auto vars = build_token_variants(tokens, StageConfig::full(), res);
  for (const TokenVariants& tv : vars) {
    if (!tv.token.is_lexical) {
      CHECK(tv.spellings == std::vector<std::u32string>{tv.token.surface});
    }
  }
}

TEST_CASE("kanji without kana is rejected") {
  StageConfig bad;
  bad.kanji = true;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("empty references are rejected") {
  auto res = fixtures().resources();
  CHECK_THROWS_AS(build_reference_lattice(u32(""), StageConfig::raw(), res),
                  EmptyReferenceError);
}
