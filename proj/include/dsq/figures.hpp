// The four illustrated configurations, all with u1 = "aaabaa", u2 = "aaab":
//   1: U^2 with e1 = 4, e2 = 2 (inversion factors)
//   2: U^2 with e1 = e2 = 2, extended by "aaa" (alpha family)
//   3: U^2 with e1 = 2, e2 = 1, extended by "aaa" (alpha family)
//   4: U^2 with e1 = 5, e2 = 1, extended by the first 15 symbols of U
//      (alpha+beta family)

#pragma once

#include <string>
#include <vector>

#include "dsq/core.hpp"
#include "dsq/doublesq.hpp"

namespace dsq {

inline constexpr int figure_count = 4;

// Throws std::out_of_range for n outside 1..4.
Factorization figure_factorization(int n);
Word figure_word(int n);

struct FigureCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

std::vector<FigureCheck> figure_checks(int n);

// Word with one bracket line per square of every FS-double square ("[ ][ ]"
// for u^2, "[ )( )" for U^2), u2 / u2_bar underlines for the first one and
// '^' at inversion factor starts.
std::string render_figure(int n, bool color);

}  // namespace dsq
