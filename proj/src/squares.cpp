#include "dsq/squares.hpp"

#include <algorithm>

namespace dsq {

namespace {

// For every diagonal d, run[i] = lcp(w[i..], w[i+d..]). Squares of
// generator length d start where run[i] >= d; the largest run over all
// diagonals is the longest factor starting at i that reoccurs further right.
struct DiagonalScan {
  std::vector<SquareOcc> squares;
  std::vector<std::size_t> max_later_match;
};

DiagonalScan scan_diagonals(std::string_view w) {
  const std::size_t n = w.size();
  DiagonalScan scan;
  scan.max_later_match.assign(n, 0);
  for (std::size_t d = 1; d < n; ++d) {
    std::size_t run = 0;
    for (std::size_t i = n - d; i-- > 0;) {
      run = (w[i] == w[i + d]) ? run + 1 : 0;
      scan.max_later_match[i] = std::max(scan.max_later_match[i], run);
      if (run >= d) scan.squares.push_back(SquareOcc{i + 1, d});
    }
  }
  std::sort(scan.squares.begin(), scan.squares.end());
  return scan;
}

}  // namespace

std::vector<SquareOcc> enumerate_squares(std::string_view w) {
  return scan_diagonals(w).squares;
}

std::vector<SquareOcc> enumerate_squares_naive(std::string_view w) {
  std::vector<SquareOcc> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = 1; i + 2 * len <= n; ++len) {
      bool equal = true;
      for (std::size_t k = 0; k < len && equal; ++k) {
        equal = w[i + k] == w[i + len + k];
      }
      if (equal) out.push_back(SquareOcc{i + 1, len});
    }
  }
  return out;
}

RightmostTable::RightmostTable(Word host) : host_(std::move(host)) {
  const std::string_view w = host_.view();
  const std::size_t n = w.size();
  auto scan = scan_diagonals(w);
  for (const auto& sq : scan.squares) {
    if (2 * sq.gen_len > scan.max_later_match[sq.start - 1]) {
      squares_.push_back(sq);
    }
  }
  offsets_.assign(n + 2, 0);
  for (const auto& sq : squares_) ++offsets_[sq.start];
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    offsets_[i] += offsets_[i - 1];
  }
  by_content_.resize(squares_.size());
  for (std::size_t i = 0; i < by_content_.size(); ++i) by_content_[i] = i;
  std::sort(by_content_.begin(), by_content_.end(),
            [this](std::size_t a, std::size_t b) {
              return generator(a) < generator(b);
            });
}

std::string_view RightmostTable::generator(std::size_t index) const {
  const auto& sq = squares_[index];
  return host_.view().substr(sq.start - 1, sq.gen_len);
}

std::span<const SquareOcc> RightmostTable::at(std::size_t start) const {
  if (start == 0 || start > host_.size()) return {};
  const std::size_t begin = offsets_[start - 1];
  const std::size_t end = offsets_[start];
  return std::span<const SquareOcc>(squares_).subspan(begin, end - begin);
}

std::optional<SquareOcc> RightmostTable::find(
    std::string_view generator_word) const {
  auto it = std::lower_bound(by_content_.begin(), by_content_.end(),
                             generator_word,
                             [this](std::size_t index, std::string_view key) {
                               return generator(index) < key;
                             });
  if (it == by_content_.end() || generator(*it) != generator_word) {
    return std::nullopt;
  }
  return squares_[*it];
}

std::vector<std::size_t> RightmostTable::overfull_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t pos = 1; pos <= host_.size(); ++pos) {
    if (offsets_[pos] - offsets_[pos - 1] > 2) out.push_back(pos);
  }
  return out;
}

RightmostTable rightmost_table(const Word& w) { return RightmostTable(w); }

std::size_t distinct_square_count(const Word& w) {
  return rightmost_table(w).size();
}

std::size_t nonprimitive_rooted_count(const RightmostTable& table) {
  const auto w = table.host().view();
  return static_cast<std::size_t>(
      std::count_if(table.squares().begin(), table.squares().end(),
                    [w](const SquareOcc& sq) {
                      return !is_primitive(w.substr(sq.start - 1, sq.gen_len));
                    }));
}

std::size_t nonprimitive_rooted_count(const Word& w) {
  return nonprimitive_rooted_count(rightmost_table(w));
}

std::size_t primitively_rooted_count(const Word& w) {
  const auto table = rightmost_table(w);
  return table.size() - nonprimitive_rooted_count(table);
}

}  // namespace dsq
