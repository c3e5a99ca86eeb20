#include <gtest/gtest.h>

#include "dsq/figures.hpp"
#include "dsq/report.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dsq;
using nlohmann::json;

TEST(Fnv1a64, KnownValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(WordLabel, EchoesShortWordsHashesLongOnes) {
  EXPECT_EQ(word_label("abc"), "abc");
  const std::string edge(max_echoed_length, 'a');
  EXPECT_EQ(word_label(edge), edge);
  const std::string longer = edge + "b";
  const std::string label = word_label(longer);
  ASSERT_EQ(label.size(), 8u + 16u);
  EXPECT_EQ(label.substr(0, 8), "fnv1a64:");
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(longer)));
  EXPECT_EQ(label.substr(8), buf);
}

TEST(Analyze, SmallestDoubleSquare) {
  const auto r = analyze(Word("abaababaab"));
  EXPECT_EQ(r.word, "abaababaab");
  EXPECT_EQ(r.length, 10u);
  EXPECT_EQ(r.delta, 1u);
  EXPECT_EQ(r.distinct_squares, 5u);
  ASSERT_EQ(r.fs_double_squares.size(), 1u);
  EXPECT_EQ(r.fs_double_squares[0],
            (FsEntry{1, 3, 5, "ab", "a", 1, 1, 2, 7, 2, 2, 7, 7}));
  EXPECT_TRUE(r.mates.empty());
  ASSERT_TRUE(r.family);
  EXPECT_EQ(r.family->kind, "alpha");
  EXPECT_EQ(r.family->size, 1u);
  EXPECT_EQ(r.family->size_bound, 1u);
  ASSERT_EQ(r.family->segments.size(), 1u);
  EXPECT_EQ(r.family->segments[0], (SegmentEntry{"alpha_segment", 1, 1, {1}}));
  EXPECT_TRUE(r.bounds.all_pass());
}

TEST(Analyze, NoDoubleSquare) {
  const auto r = analyze(Word("abcab"));
  EXPECT_EQ(r.delta, 0u);
  EXPECT_TRUE(r.fs_double_squares.empty());
  EXPECT_FALSE(r.family);
  EXPECT_EQ(to_json(r).at("family"), nullptr);
}

TEST(Analyze, IntervalsShiftWithHostOffset) {
  const auto r = analyze(Word("cc" + std::string("abaababaab")));
  ASSERT_FALSE(r.fs_double_squares.empty());
  const auto& e = r.fs_double_squares.back();
  EXPECT_EQ(e.start, 3u);
  EXPECT_EQ(e.L1, 4u);
  EXPECT_EQ(e.N2, 9u);
}

TEST(Analyze, FigureFourMates) {
  const auto r = analyze(figure_word(4));
  ASSERT_TRUE(r.family);
  EXPECT_EQ(r.family->kind, "alpha_beta");
  EXPECT_EQ(r.mates.size() + 1, r.fs_double_squares.size());
  std::size_t beta = 0;
  for (const auto& m : r.mates) {
    EXPECT_EQ(m.from_start, r.fs_double_squares.front().start);
    beta += m.kind == "beta";
  }
  EXPECT_EQ(beta, 8u);
}

TEST(Analyze, AgreesWithOracle) {
  gen::Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    const std::string w = gen::double_square_host(rng, 5, 3);
    const auto r = analyze(Word(w));
    EXPECT_EQ(r.distinct_squares, oracle::distinct(w));
    const auto fs = oracle::fs_double_squares(w);
    ASSERT_EQ(r.fs_double_squares.size(), fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto& e = r.fs_double_squares[k];
      EXPECT_EQ(e.start, fs[k].start);
      const auto pos = oracle::inversion_positions(e.u1, e.u2, e.e1, e.e2);
      std::vector<std::size_t> predicted;
      for (std::size_t p = e.L1; p <= e.R1; ++p) predicted.push_back(p - e.start + 1);
      for (std::size_t p = e.L2; p <= e.R2; ++p) predicted.push_back(p - e.start + 1);
      EXPECT_EQ(predicted, pos) << w;
    }
  }
}

TEST(ReportJson, RoundTripAndKeys) {
  for (const std::string w : {"abaababaab", "abcab", "a"}) {
    const auto r = analyze(Word(w));
    const json j = to_json(r);
    EXPECT_EQ(j.at("schema_version"), 1);
    for (const char* key : {"word", "length", "delta", "distinct_squares",
                            "fs_double_squares", "mates", "family", "bounds"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(report_from_json(j), r);
    EXPECT_EQ(report_from_json(json::parse(j.dump())), r);
  }
  const auto fig = analyze(figure_word(4));
  EXPECT_EQ(report_from_json(to_json(fig)), fig);
  const json j = to_json(fig);
  EXPECT_EQ(j.at("family").at("segments").at(1).at("type_pair"), json::array({4, 2}));
}

TEST(ReportJson, Rejects) {
  json j = to_json(analyze(Word("abaababaab")));
  j["schema_version"] = 2;
  try {
    report_from_json(j);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "unsupported schema_version");
  }
  j["schema_version"] = 1;
  j.erase("bounds");
  try {
    report_from_json(j);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()).rfind("malformed report: ", 0), 0u);
  }
  EXPECT_THROW(report_from_json(json::array()), std::invalid_argument);
  EXPECT_THROW(report_from_json(json{{"schema_version", "1"}}), std::invalid_argument);
}

TEST(RenderText, PlainAndColored) {
  const auto r = analyze(Word("abaababaab"));
  const std::string plain = render_text(r, false);
  EXPECT_EQ(plain.find('\x1b'), std::string::npos);
  EXPECT_NE(plain.find("length 10, delta 1, distinct squares 5"), std::string::npos);
  EXPECT_NE(plain.find("fs 1: |u|=3 |U|=5 u1=ab u2=a e1=1 e2=1 inversion [2..2] [7..7]"),
            std::string::npos);
  EXPECT_NE(plain.find("family alpha, size 1 (bound 1)"), std::string::npos);
  EXPECT_NE(plain.find("bound fs_double_squares_strengthened: 6*1 <= 44 ok"),
            std::string::npos);
  const std::string colored = render_text(r, true);
  EXPECT_NE(colored.find("\x1b[32mok\x1b[0m"), std::string::npos);
  EXPECT_EQ(colored.rfind("\x1b[1mabaababaab\x1b[0m", 0), 0u);
}
