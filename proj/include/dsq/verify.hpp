// Exhaustive property checking over canonical words.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsq/core.hpp"
#include "dsq/shard.hpp"

namespace dsq {

struct Certificate {
  std::string word;
  std::string property;
  std::string witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct PropertyStats {
  std::string name;
  std::size_t checked = 0;     // instances examined (words, squares, pairs)
  std::size_t violations = 0;

  friend bool operator==(const PropertyStats&, const PropertyStats&) = default;
};

struct VerifyResult {
  std::size_t words = 0;
  std::vector<PropertyStats> properties;  // in suite order
  std::vector<Certificate> certificates;  // capped per property
  // Length of the shortest word holding an FS-double square.
  std::optional<std::size_t> shortest_fs_length;
  // Ordered FS-double-square pairs for which more than one mate clause
  // holds; the first clause in definition order decides.
  std::size_t clause_overlaps = 0;
  // Pairs with the beta shape at exponent 1, excluded from beta.
  std::size_t beta_exponent_one = 0;

  bool ok() const;
  friend bool operator==(const VerifyResult&, const VerifyResult&) = default;
};

inline constexpr std::size_t certificates_per_property = 20;

// Every property name, in a fixed order.
const std::vector<std::string>& property_names();

// Splits a comma separated list; "all" expands to every property. Throws
// std::invalid_argument("unknown property: NAME") or on an empty suite.
std::vector<std::string> parse_suite(std::string_view csv);

// Checks one word against the suite, accumulating into result (whose
// properties must match the suite, see make_result).
VerifyResult make_result(const std::vector<std::string>& suite);
void check_word(const Word& w, const std::vector<std::string>& suite,
                VerifyResult& result);

// All canonical words of length 1..max_len over at most `alphabet`
// symbols. Throws std::invalid_argument on an empty suite, an unknown
// property, alphabet outside 1..26 or max_len == 0.
VerifyResult exhaustive_verify(std::size_t max_len, std::size_t alphabet,
                               const std::vector<std::string>& suite,
                               const ShardOptions& options = {});

nlohmann::json to_json(const VerifyResult& r);
VerifyResult verify_result_from_json(const nlohmann::json& j);

}  // namespace dsq
