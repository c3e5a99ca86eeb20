// Inversion factors of a factorizable double square. All positions are
// 1-based and local to U^2 (position 1 is the start of the double square).

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsq/doublesq.hpp"

namespace dsq {

struct InvIntervals {
  std::size_t N1 = 0;
  std::size_t N2 = 0;
  std::size_t L1 = 0;
  std::size_t R1 = 0;
  std::size_t L2 = 0;
  std::size_t R2 = 0;

  friend bool operator==(const InvIntervals&, const InvIntervals&) = default;
};

// u2_bar u2 u2 u2_bar, of length 2|u1|.
std::string natural_inversion_factor(const Factorization& f);

// Closed-form N1/N2 and the shift intervals around them.
InvIntervals intervals(const Factorization& f);

// [L1..R1] followed by [L2..R2].
std::vector<std::size_t> interval_positions(const InvIntervals& iv);

// Definition check on U^2. Requires 1 <= i <= |U^2| - 2|u1| + 1, otherwise
// throws std::out_of_range.
bool is_inversion_factor_at(const Factorization& f, std::size_t i);

// Definition-based scan of every admissible start in U^2.
std::vector<std::size_t> find_inversion_factors(const Factorization& f);

}  // namespace dsq
