#include <gtest/gtest.h>

#include "dsq/figures.hpp"
#include "dsq/inversion.hpp"
#include "dsq/mates.hpp"
#include "generators.hpp"

using namespace dsq;

namespace {

std::vector<FsDoubleSquare> fs_of(const std::string& w) {
  return find_fs_double_squares(Word(w));
}

}  // namespace

TEST(MateKind, NamesRoundTrip) {
  for (auto k : {MateKind::alpha, MateKind::beta, MateKind::gamma, MateKind::delta,
                 MateKind::epsilon, MateKind::super_epsilon, MateKind::unclassified}) {
    EXPECT_EQ(mate_kind_from_string(to_string(k)), k);
  }
  EXPECT_EQ(mate_kind_from_string("zeta"), std::nullopt);
  EXPECT_EQ(to_string(VCase::a5), "a5");
}

TEST(GapTail, ShiftedCopy) {
  const auto fs = fs_of(figure_word(2).str());
  ASSERT_GE(fs.size(), 2u);
  const auto gt = gap_tail(fs[0].square, fs[1].square);
  EXPECT_EQ(gt.gap, 1);
  EXPECT_EQ(gt.tail, 1);
  EXPECT_THROW(gap_tail(fs[1].square, fs[0].square), std::invalid_argument);
  EXPECT_THROW(gap_tail(fs[0].square, fs[0].square), std::invalid_argument);
  const auto other = fs_of("abaababaab");
  EXPECT_THROW(gap_tail(other[0].square, fs[1].square), std::invalid_argument);
}

TEST(CanShiftRight, Examples) {
  EXPECT_TRUE(can_shift_right("abab", 1, 2, 2));
  EXPECT_FALSE(can_shift_right("abab", 1, 2, 3));
  EXPECT_FALSE(can_shift_right("abba", 1, 2, 1));
  EXPECT_TRUE(can_shift_right("abba", 1, 2, 0));
}

TEST(ShiftedPower, Examples) {
  const auto f = make_factorization("ab", "a", 2, 1);
  EXPECT_TRUE(is_shifted_power("aba", f, 1));
  EXPECT_TRUE(is_shifted_power("bab", f, 1));
  EXPECT_TRUE(is_shifted_power("babab", f, 2));
  EXPECT_FALSE(is_shifted_power("aab", f, 1));
  EXPECT_FALSE(is_shifted_power("aba", f, 2));
}

TEST(LongMatePrefix, LiteralAndShifted) {
  const auto f = make_factorization("aaabaa", "aaab", 1, 1);
  const std::string core = f.u2 + f.u1 + f.u2;
  EXPECT_TRUE(has_long_mate_prefix(f.u2_bar + core + "x", f));
  EXPECT_TRUE(has_long_mate_prefix("ab" + f.u2_bar + core, f));
  EXPECT_TRUE(has_long_mate_prefix("a" + f.u1 + core, f));
  EXPECT_FALSE(has_long_mate_prefix(core, f));

  const std::string u1 = rotate_left(f.u1, 1);
  const std::string u2 = (f.u2 + f.u1).substr(1, f.u2.size());
  const std::string shifted = u1.substr(u2.size()) + u2 + u1 + u2;
  EXPECT_FALSE(has_long_mate_prefix(shifted, f));
  EXPECT_TRUE(has_long_mate_prefix(shifted, f, true));
}

TEST(Classify, FirstMatchingClauseWins) {
  MateClauses c;
  EXPECT_EQ(classify(c), MateKind::unclassified);
  c.epsilon = true;
  EXPECT_EQ(classify(c), MateKind::epsilon);
  c.super_epsilon = true;
  EXPECT_EQ(classify(c), MateKind::super_epsilon);
  c.delta = true;
  EXPECT_EQ(classify(c), MateKind::delta);
  c.gamma = true;
  EXPECT_EQ(classify(c), MateKind::gamma);
  c.beta = true;
  EXPECT_EQ(classify(c), MateKind::beta);
  c.alpha = true;
  EXPECT_EQ(classify(c), MateKind::alpha);
  EXPECT_EQ(c.matched(), 5);
}

TEST(ClassifyMate, FigureTwoIsAllAlpha) {
  const auto fs = fs_of(figure_word(2).str());
  ASSERT_EQ(fs.size(), 4u);
  EXPECT_EQ(right_shift_limit(fs[0]), intervals(fs[0].factors).R1);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    EXPECT_EQ(classify_mate(fs[0], fs[i]), MateKind::alpha) << i;
  }
}

TEST(ClassifyMate, FigureFourHasBetaMates) {
  const auto fs = fs_of(figure_word(4).str());
  std::size_t beta = 0;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    const auto c = mate_clauses(fs[0], fs[i]);
    if (classify(c) == MateKind::beta) {
      ++beta;
      EXPECT_EQ(fs[i].square.U_len, fs[0].square.U_len);
      EXPECT_LT(fs[i].square.u_len, fs[0].square.u_len);
      EXPECT_LT(fs[i].square.start, right_shift_limit(fs[0]));
    }
  }
  EXPECT_EQ(beta, 8u);
}

TEST(GammaType, RejectsNonGamma) {
  const auto fs = fs_of(figure_word(2).str());
  EXPECT_THROW(gamma_type(fs[0], fs[1].square), std::invalid_argument);
}

TEST(MateProperties, TaxonomyOnStructuredHosts) {
  gen::Rng rng(41);
  std::size_t pairs = 0;
  std::size_t gammas = 0;
  for (int i = 0; i < 3000; ++i) {
    const std::string w = gen::double_square_host(rng, 6, 4);
    const auto fs = fs_of(w);
    if (fs.size() < 2) continue;
    const auto& U = fs[0];
    const std::size_t r1 = right_shift_limit(U);
    for (std::size_t k = 1; k < fs.size(); ++k) {
      ++pairs;
      const auto& V = fs[k];
      const MateKind kind = classify_mate(U, V);
      ASSERT_NE(kind, MateKind::unclassified) << w << " at " << V.square.start;
      const bool eps = kind == MateKind::epsilon || kind == MateKind::super_epsilon;
      EXPECT_EQ(eps, V.square.start >= r1) << w;
      if (eps) {
        EXPECT_GT(V.square.end_first_u(), U.square.end_first_u()) << w;
      }
      if (kind == MateKind::alpha) {
        EXPECT_EQ(V.factors.e1, U.factors.e1) << w;
        EXPECT_EQ(V.factors.e2, U.factors.e2) << w;
        EXPECT_EQ(V.factors.u1, rotate_left(U.factors.u1, V.square.start - U.square.start))
            << w;
      }
      if (kind == MateKind::beta) {
        EXPECT_GE(U.factors.e1, U.factors.e2 + 2) << w;
      }
      if (kind == MateKind::gamma) {
        ++gammas;
        const auto t = gamma_type(U, V.square);
        EXPECT_EQ(t.p + t.q, U.factors.e1 + U.factors.e2) << w;
        EXPECT_EQ(t.p + t.t, U.factors.e1) << w;
      }
    }
  }
  EXPECT_GT(pairs, 1000u);
  EXPECT_GT(gammas, 0u);
}

TEST(MateProperties, ShortSquaresInsideUAreShiftedPowers) {
  gen::Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const std::string w = gen::double_square_host(rng, 6, 4);
    const auto fs = fs_of(w);
    if (fs.empty()) continue;
    const auto& U = fs[0];
    const std::size_t r1 = right_shift_limit(U);
    const RightmostTable table{Word(w)};
    for (const auto& sq : table.squares()) {
      if (sq.start < U.square.start || sq.start >= r1) continue;
      const VCase c = v_case(U, sq);
      EXPECT_NE(c, VCase::a3) << w;
      if (sq.gen_len >= U.factors.u1.size()) {
        EXPECT_NE(c, VCase::none) << w << " v at " << sq.start << " len " << sq.gen_len;
      }
    }
  }
}
