// Counting bounds on squares and FS-double squares of a single word.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsq/core.hpp"
#include "dsq/squares.hpp"

namespace dsq {

// Number of positions holding two rightmost squares.
std::size_t delta(const Word& w);
std::size_t delta(const RightmostTable& t);

struct BoundCheck {
  std::string name;
  // Bounds are compared in exact integer arithmetic: the check passes iff
  // scale * observed <= bound_numerator. For the plain floor bounds scale
  // is 1.
  long long bound = 0;
  long long observed = 0;
  long long scale = 1;
  bool pass = true;

  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t distinct = 0;
  std::vector<BoundCheck> checks;

  bool all_pass() const;
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// delta <= floor(5n/6); distinct <= floor(11n/6); distinct <= 2n;
// non-primitively-rooted distinct <= max(0, floor(n/2) - 1); and, when the
// word starts with an FS-double square with shorter generator u,
// 6 delta <= 5n - 2|u|.
BoundReport check_bounds(const Word& w);
BoundReport check_bounds(const RightmostTable& t);

}  // namespace dsq
