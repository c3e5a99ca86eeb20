#include <gtest/gtest.h>

#include "dsq/doublesq.hpp"
#include "dsq/figures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dsq;

namespace {

void expect_factorization(const Factorization& f, const std::string& u1,
                          const std::string& u2, std::size_t e1, std::size_t e2) {
  EXPECT_EQ(f.u1, u1);
  EXPECT_EQ(f.u2, u2);
  EXPECT_EQ(f.e1, e1);
  EXPECT_EQ(f.e2, e2);
  EXPECT_EQ(f.u2_bar, u1.substr(u2.size()));
  EXPECT_EQ(f.u1_hat, u1.substr(u2.size()) + u2);
}

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(MakeFactorization, Validates) {
  EXPECT_THROW(make_factorization("ab", "b", 1, 1), std::invalid_argument);
  EXPECT_THROW(make_factorization("abab", "a", 1, 1), std::invalid_argument);
  EXPECT_THROW(make_factorization("ab", "a", 1, 2), std::invalid_argument);
  EXPECT_THROW(make_factorization("ab", "", 1, 1), std::invalid_argument);
  const auto f = make_factorization("aaabaa", "aaab", 4, 2);
  EXPECT_EQ(f.u_len(), 28u);
  EXPECT_EQ(f.U_len(), 40u);
}

TEST(MakeDoubleSquare, RequiresBothSquares) {
  const Word w("abaababaab");
  const auto d = make_double_square(w, 1, 3, 5);
  EXPECT_EQ(d.u(), "aba");
  EXPECT_EQ(d.U(), "abaab");
  EXPECT_EQ(d.end_first_u(), 3u);
  EXPECT_EQ(d.end_U_square(), 10u);
  EXPECT_THROW(make_double_square(w, 2, 3, 5), std::invalid_argument);
  EXPECT_THROW(make_double_square(w, 1, 5, 3), std::invalid_argument);
}

TEST(Factorize, Examples) {
  expect_factorization(factorize("aba", "abaab"), "ab", "a", 1, 1);
  const auto fig = figure_factorization(1);
  expect_factorization(factorize(fig.u(), fig.U()), "aaabaa", "aaab", 4, 2);
  EXPECT_EQ(message_of([] { factorize("aabbaa", "aabbaabba"); }),
            "not a balanced double square");
  EXPECT_EQ(message_of([] { factorize("abab", "ababab"); }), "not factorizable");
  EXPECT_EQ(message_of([] { factorize("aba", "abaaba"); }),
            "not a balanced double square");
}

TEST(CheckFactorizable, Examples) {
  EXPECT_EQ(check_factorizable("aba", "abaab").labels(), "abc");
  EXPECT_EQ(check_factorizable("abab", "ababab").labels(), "");
  EXPECT_EQ(check_factorizable("aa", "aaa").labels(), "");
  EXPECT_THROW(check_factorizable("ab", "abab"), std::invalid_argument);
  EXPECT_THROW(check_factorizable("ab", "ba"), std::invalid_argument);
}

TEST(ShiftBudget, Examples) {
  auto b = shift_budget(make_factorization("aaabaa", "aaab", 1, 1));
  EXPECT_EQ(b.left, 0u);
  EXPECT_EQ(b.right, 3u);
  b = shift_budget(make_factorization("ab", "a", 1, 1));
  EXPECT_EQ(b.left, 0u);
  EXPECT_EQ(b.right, 0u);
  b = shift_budget(make_factorization("aab", "a", 1, 1));
  EXPECT_EQ(b.left, 0u);
  EXPECT_EQ(b.right, 1u);
}

TEST(NonprimitiveCase, Examples) {
  EXPECT_TRUE(verify_nonprimitive_case("abaaba", "abaabaabaab"));
  EXPECT_THROW(verify_nonprimitive_case("aba", "abaab"), std::invalid_argument);
  EXPECT_THROW(verify_nonprimitive_case("abab", "abababa"), std::invalid_argument);
}

TEST(FindFs, Examples) {
  const auto fs = find_fs_double_squares(Word("abaababaab"));
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].square.start, 1u);
  EXPECT_EQ(fs[0].square.u_len, 3u);
  EXPECT_EQ(fs[0].square.U_len, 5u);
  expect_factorization(fs[0].factors, "ab", "a", 1, 1);

  EXPECT_TRUE(find_fs_double_squares(Word("ab")).empty());

  const auto fig2 = find_fs_double_squares(figure_word(2));
  ASSERT_EQ(fig2.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(fig2[i].square.start, i + 1);
}

TEST(FindFs, AgreesWithOracleAndFactorizesUniquely) {
  gen::Rng rng(21);
  std::size_t seen = 0;
  for (int i = 0; i < 600; ++i) {
    const std::string w = gen::double_square_host(rng, 5, 3);
    const auto fs = find_fs_double_squares(Word(w));
    const auto expected = oracle::fs_double_squares(w);
    ASSERT_EQ(fs.size(), expected.size()) << w;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      ++seen;
      const auto& d = fs[k];
      EXPECT_EQ(d.square.start, expected[k].start);
      EXPECT_EQ(d.square.u_len, expected[k].u_len);
      EXPECT_EQ(d.square.U_len, expected[k].U_len);
      const std::string u(d.square.u());
      const std::string U(d.square.U());
      const auto all = oracle::factorizations(u, U);
      ASSERT_EQ(all.size(), 1u) << w << " at " << d.square.start;
      EXPECT_EQ(all[0], (oracle::Fact{d.factors.u1, d.factors.u2, d.factors.e1,
                                      d.factors.e2}));
      EXPECT_EQ(d.factors.u(), u);
      EXPECT_EQ(d.factors.U(), U);
      EXPECT_TRUE(oracle::is_primitive(U));
      EXPECT_GE(2 * U.size(), 10u);
      const auto b = shift_budget(d.factors);
      EXPECT_LE(b.left + b.right + 2, d.factors.u1.size());
      EXPECT_LT(u.size(), U.size());
      EXPECT_LT(U.size(), 2 * u.size());
    }
  }
  EXPECT_GT(seen, 400u);
}

TEST(FindFs, UPeriodicFormNeverExtendsToU) {
  gen::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const std::string w = gen::double_square_host(rng, 5, 3);
    for (const auto& d : find_fs_double_squares(Word(w))) {
      const std::string u(d.square.u());
      const std::string U(d.square.U());
      for (std::size_t p = 2; p < u.size(); ++p) {
        const std::string v1 = u.substr(0, p);
        if (!oracle::is_primitive(v1)) continue;
        const std::size_t i_max = u.size() / p;
        const std::string v2 = u.substr(i_max * p);
        if (v2.empty() || oracle::repeat(v1, i_max) + v2 != u) continue;
        for (std::size_t j = 1; j * p < U.size(); ++j) {
          EXPECT_NE(oracle::repeat(v1, j) + v2, U) << w;
        }
      }
    }
  }
}

TEST(FindFs, NonprimitiveShorterSquares) {
  gen::Rng rng(23);
  std::size_t seen = 0;
  for (int i = 0; i < 4000 && seen < 20; ++i) {
    const std::string v = gen::word(rng, rng.between(2, 4), 2);
    if (!oracle::is_primitive(v)) continue;
    const std::size_t k = rng.between(2, 3);
    const std::string v1 = v.substr(0, rng.between(1, v.size() - 1));
    const std::string U = oracle::repeat(v, 2 * k - 1) + v1;
    const std::string w = U + U + gen::word(rng, rng.between(0, 4), 2);
    for (const auto& d : find_fs_double_squares(Word(w))) {
      if (oracle::is_primitive(std::string(d.square.u()))) continue;
      ++seen;
      EXPECT_TRUE(verify_nonprimitive_case(d.square.u(), d.square.U())) << w;
    }
  }
  EXPECT_GT(seen, 0u);
}

TEST(FindFs, NothingBelowLengthTen) {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::string w(n, 'a');
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) w[i] = static_cast<char>('a' + c % 3);
      ASSERT_TRUE(find_fs_double_squares(Word(w)).empty()) << w;
    }
  }
}
