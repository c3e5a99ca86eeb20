// Exhaustive search for sigma_d(n): the largest number of distinct
// primitively rooted squares in a word of length n with exactly d symbols.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsq/shard.hpp"

namespace dsq {

struct SearchResult {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t sigma = 0;
  // Lexicographically smallest canonical words attaining sigma, at most
  // max_witnesses of them.
  std::vector<std::string> witnesses;

  bool conjecture_holds() const { return sigma + d <= n; }
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

inline constexpr std::size_t max_witnesses = 10;

// Throws std::invalid_argument unless 1 <= d <= n and d <= 26.
SearchResult sigma_search(std::size_t d, std::size_t n,
                          const ShardOptions& options = {});

nlohmann::json to_json(const SearchResult& r);

}  // namespace dsq
