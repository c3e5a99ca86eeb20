// Square occurrences and the rightmost-occurrence table used for counting
// distinct squares.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dsq/core.hpp"

namespace dsq {

// u u at host[start .. start + 2*gen_len - 1].
struct SquareOcc {
  std::size_t start = 1;
  std::size_t gen_len = 0;

  std::size_t end() const { return start + 2 * gen_len - 1; }
  friend auto operator<=>(const SquareOcc&, const SquareOcc&) = default;
};

// All square occurrences sorted by (start, gen_len), via longest common
// extensions along each diagonal. O(n^2).
std::vector<SquareOcc> enumerate_squares(std::string_view w);

// Three-loop reference enumeration. O(n^3).
std::vector<SquareOcc> enumerate_squares_naive(std::string_view w);

// Rightmost occurrence of every distinct square, grouped by start position.
class RightmostTable {
 public:
  explicit RightmostTable(Word host);

  const Word& host() const { return host_; }

  // Sorted by (start, gen_len).
  std::span<const SquareOcc> squares() const { return squares_; }

  // Rightmost squares starting at a 1-based position, ordered by gen_len.
  std::span<const SquareOcc> at(std::size_t start) const;

  std::optional<SquareOcc> find(std::string_view generator) const;

  std::size_t size() const { return squares_.size(); }

  // Positions holding more than two rightmost squares. Nonempty only if the
  // two-rightmost-squares theorem is false for this host.
  std::vector<std::size_t> overfull_positions() const;

 private:
  std::string_view generator(std::size_t index) const;

  Word host_;
  std::vector<SquareOcc> squares_;
  std::vector<std::size_t> offsets_;  // squares_ index range per start
  std::vector<std::size_t> by_content_;
};

RightmostTable rightmost_table(const Word& w);

std::size_t distinct_square_count(const Word& w);
std::size_t nonprimitive_rooted_count(const Word& w);
std::size_t primitively_rooted_count(const Word& w);

std::size_t nonprimitive_rooted_count(const RightmostTable& table);

}  // namespace dsq
