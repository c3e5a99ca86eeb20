#include "dsq/inversion.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsq {

namespace {

bool inversion_at(const Factorization& f, std::string_view U_sq,
                  std::size_t i) {
  const std::size_t a = i - 1;
  const std::size_t bar = f.u2_bar.size();
  const std::size_t head = f.u2.size();
  for (std::size_t j = 0; j < bar; ++j) {
    if (U_sq[a + j] != U_sq[a + j + f.u1.size() + head]) return false;
  }
  for (std::size_t j = bar; j < head + bar; ++j) {
    if (U_sq[a + j] != U_sq[a + j + head]) return false;
  }
  return true;
}

}  // namespace

std::string natural_inversion_factor(const Factorization& f) {
  return f.u2_bar + f.u2 + f.u2 + f.u2_bar;
}

InvIntervals intervals(const Factorization& f) {
  const std::size_t p = f.u1.size();
  const std::size_t h = f.u2.size();
  const auto budget = shift_budget(f);
  const std::size_t square_end = 2 * f.U_len();

  InvIntervals iv;
  iv.N1 = (f.e1 - 1) * p + h + 1;
  iv.N2 = (2 * f.e1 + f.e2 - 1) * p + 2 * h + 1;
  iv.L1 = iv.N1 > budget.left ? std::max<std::size_t>(1, iv.N1 - budget.left) : 1;
  iv.R1 = iv.N1 + budget.right;
  iv.L2 = iv.N2 - budget.left;
  iv.R2 = std::min(square_end - 2 * p + 1, iv.N2 + budget.right);
  return iv;
}

std::vector<std::size_t> interval_positions(const InvIntervals& iv) {
  std::vector<std::size_t> out;
  for (std::size_t i = iv.L1; i <= iv.R1; ++i) out.push_back(i);
  for (std::size_t i = iv.L2; i <= iv.R2; ++i) out.push_back(i);
  return out;
}

bool is_inversion_factor_at(const Factorization& f, std::size_t i) {
  const std::string U_sq = f.U() + f.U();
  const std::size_t last = U_sq.size() - 2 * f.u1.size() + 1;
  if (i == 0 || i > last) {
    throw std::out_of_range("inversion factor start " + std::to_string(i) +
                            " outside [1.." + std::to_string(last) + "]");
  }
  return inversion_at(f, U_sq, i);
}

std::vector<std::size_t> find_inversion_factors(const Factorization& f) {
  const std::string U_sq = f.U() + f.U();
  const std::size_t last = U_sq.size() - 2 * f.u1.size() + 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= last; ++i) {
    if (inversion_at(f, U_sq, i)) out.push_back(i);
  }
  return out;
}

}  // namespace dsq
