#include "dsq/bounds.hpp"

#include <algorithm>

namespace dsq {

std::size_t delta(const RightmostTable& t) {
  std::size_t count = 0;
  const auto squares = t.squares();
  for (std::size_t i = 0; i + 1 < squares.size(); ++i) {
    if (squares[i].start == squares[i + 1].start) ++count;
  }
  return count;
}

std::size_t delta(const Word& w) { return delta(rightmost_table(w)); }

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.pass; });
}

namespace {

BoundCheck make_check(std::string name, long long bound, long long observed,
                      long long scale = 1) {
  return BoundCheck{std::move(name), bound, observed, scale,
                    scale * observed <= bound};
}

}  // namespace

BoundReport check_bounds(const RightmostTable& t) {
  BoundReport r;
  const auto n = static_cast<long long>(t.host().size());
  r.n = t.host().size();
  r.delta = delta(t);
  r.distinct = t.size();
  const auto d = static_cast<long long>(r.delta);
  const auto distinct = static_cast<long long>(r.distinct);
  r.checks.push_back(make_check("fs_double_squares", 5 * n / 6, d));
  r.checks.push_back(make_check("distinct_squares", 11 * n / 6, distinct));
  r.checks.push_back(make_check("distinct_squares_2n", 2 * n, distinct));
  r.checks.push_back(make_check(
      "nonprimitive_squares", std::max<long long>(0, n / 2 - 1),
      static_cast<long long>(nonprimitive_rooted_count(t))));
  const auto first = t.at(1);
  if (first.size() == 2) {
    const auto u_len = static_cast<long long>(first[0].gen_len);
    r.checks.push_back(
        make_check("fs_double_squares_strengthened", 5 * n - 2 * u_len, d, 6));
  }
  return r;
}

BoundReport check_bounds(const Word& w) {
  return check_bounds(rightmost_table(w));
}

}  // namespace dsq
