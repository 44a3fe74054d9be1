#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "lenicer/kana.h"
#include "lenicer/segmenter.h"
#include "testing_support.h"

using namespace lenicer;
using namespace lenicer::testing;

namespace {

ReadingDictionary fixture_dict() {
  return ReadingDictionary::load_file(std::string(LENICER_DATA_DIR) + "/readings.tsv");
}

std::vector<std::u32string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::u32string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

}  // namespace

TEST_CASE("dictionary load rejects malformed lines with diagnostics") {
  std::istringstream in(
      "# comment\n"
      "駄目\tだめ\t30\n"
      "onlytwo\tfields\n"
      "拉麺\tらーめん\tnotanumber\n"
      "拉麺\tラーメン\t5\n"   // reading must be hiragana
      "ゼロ\tぜろ\t0\n"       // frequency below 1
      "頑張れ\tがんばれ\t40\n");
  std::vector<LoadDiagnostic> diags;
  ReadingDictionary dict = ReadingDictionary::load(in, &diags);
  CHECK(dict.size() == 2);
  REQUIRE(diags.size() == 4);
  CHECK(diags[0].line == 3);
  CHECK(diags[1].line == 4);
  CHECK(diags[2].line == 5);
  CHECK(diags[3].line == 6);
}

TEST_CASE("best reading picks the highest frequency, then file order") {
  std::istringstream in(
      "方\tほう\t50\n"
      "方\tかた\t50\n"
      "生\tなま\t10\n"
      "生\tせい\t30\n");
  ReadingDictionary dict = ReadingDictionary::load(in);
  std::u32string reading;
  REQUIRE(dict.best_reading(u32("方"), &reading));
  CHECK(reading == u32("ほう"));  // tie broken by earlier line
  REQUIRE(dict.best_reading(u32("生"), &reading));
  CHECK(reading == u32("せい"));
  CHECK_FALSE(dict.best_reading(u32("猫"), &reading));
}

TEST_CASE("the ramen sentence segments as in the fixtures") {
  ReadingDictionary dict = fixture_dict();
  auto tokens = segment_and_read(u32("この拉麺はうまい。"), dict);
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].surface == u32("この"));
  CHECK_FALSE(tokens[0].reading_known);
  CHECK(tokens[1].surface == u32("拉麺"));
  CHECK(tokens[1].reading == u32("らーめん"));
  CHECK(tokens[1].reading_known);
  CHECK(tokens[2].surface == u32("は"));
  CHECK(tokens[3].surface == u32("うまい"));
  CHECK(tokens[3].reading == u32("うまい"));
  CHECK(tokens[3].reading_known);
  CHECK(tokens[4].surface == u32("。"));
  CHECK_FALSE(tokens[4].is_lexical);
}

TEST_CASE("single dictionary words keep their reading") {
  ReadingDictionary dict = fixture_dict();
  auto tokens = segment_and_read(u32("日本"), dict);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].surface == u32("日本"));
  CHECK(tokens[0].reading == u32("にほん"));
}

TEST_CASE("kana runs outside the dictionary become one token reading themselves") {
  ReadingDictionary empty;
  auto tokens = segment_and_read(u32("ここ"), empty);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].surface == u32("ここ"));
  CHECK(tokens[0].reading == u32("ここ"));
  CHECK_FALSE(tokens[0].reading_known);

  ReadingDictionary dict;
  dict.add(u32("ここ"), u32("ここ"), 10);
  auto in_dict = segment_and_read(u32("ここ"), dict);
  REQUIRE(in_dict.size() == 1);
  CHECK(in_dict[0].reading == u32("ここ"));
  CHECK(in_dict[0].reading_known);
}

TEST_CASE("katakana runs read as hiragana") {
  ReadingDictionary empty;
  auto tokens = segment_and_read(u32("ラーメン"), empty);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].reading == u32("らーめん"));
}

TEST_CASE("unknown kanji runs carry their surface as the reading") {
  ReadingDictionary empty;
  auto tokens = segment_and_read(u32("駄目"), empty);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].surface == u32("駄目"));
  CHECK(tokens[0].reading == u32("駄目"));
  CHECK_FALSE(tokens[0].reading_known);
  CHECK(tokens[0].is_lexical);
}

TEST_CASE("unmatched runs split at script boundaries") {
  ReadingDictionary empty;
  auto tokens = segment_and_read(u32("駅はどこですか。"), empty);
  auto got = surfaces(tokens);
  std::vector<std::u32string> want = {u32("駅"), u32("はどこですか"), u32("。")};
  CHECK(got == want);
}

TEST_CASE("punctuation splits into single non-lexical tokens") {
  ReadingDictionary empty;
  auto tokens = segment_and_read(u32("はい、そう。。"), empty);
  auto got = surfaces(tokens);
  std::vector<std::u32string> want = {u32("はい"), u32("、"), u32("そう"), u32("。"),
                                      u32("。")};
  CHECK(got == want);
  CHECK_FALSE(tokens[1].is_lexical);
}

TEST_CASE("token surfaces tile the reference") {
  ReadingDictionary dict = fixture_dict();
  std::mt19937_64 rng(17);
  const std::u32string pool =
      u32("この拉麺はうまい。日本だめダメ駄目abc123ください、！頑張れヴー空");
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<size_t> len(0, 18);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::u32string ref;
    const size_t n = len(rng);
    for (size_t k = 0; k < n; ++k) ref.push_back(pool[pick(rng)]);
    std::u32string rebuilt;
    size_t expect_start = 0;
    for (const Token& t : segment_and_read(ref, dict)) {
      CHECK(t.start == expect_start);
      CHECK(t.end == t.start + t.surface.size());
      expect_start = t.end;
      rebuilt += t.surface;
      const bool reading_ok = is_valid_reading(t.reading) || t.reading == t.surface;
      CHECK(reading_ok);
    }
    CHECK(rebuilt == ref);
  }
}

TEST_CASE("segmentation is deterministic") {
  ReadingDictionary dict = fixture_dict();
  auto a = segment_and_read(u32("みなさんごきげんよう"), dict);
  auto b = segment_and_read(u32("みなさんごきげんよう"), dict);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == 2);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].surface == b[i].surface);
    CHECK(a[i].reading == b[i].reading);
  }
}

TEST_CASE("inverse index returns every surface for a reading") {
  ReadingDictionary dict = fixture_dict();
  auto surfaces = dict.surfaces_for_reading(u32("うまい"));
  std::vector<std::u32string> want = {u32("うまい"), u32("上手い"), u32("旨い"),
                                      u32("美味い")};
  CHECK(surfaces == want);
  CHECK(dict.surfaces_for_reading(u32("ぺけぺけ")).empty());
}
