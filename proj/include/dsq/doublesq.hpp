// Double squares (u, U): two squares starting at the same position with
// |u| < |U|. FS-double squares are the ones where both squares are rightmost
// occurrences; each has a unique factorization
//
//   u = u1^e1 u2,   U = u1^e1 u2 u1^e2,
//
// with u1 primitive, u2 a non-trivial proper prefix of u1, e1 >= e2 >= 1.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dsq/core.hpp"
#include "dsq/squares.hpp"

namespace dsq {

// Raised when a rightmost table holds three squares at one position.
class FalsificationError : public std::runtime_error {
 public:
  FalsificationError(const std::string& what, std::vector<std::size_t> where)
      : std::runtime_error(what), positions_(std::move(where)) {}
  const std::vector<std::size_t>& positions() const { return positions_; }

 private:
  std::vector<std::size_t> positions_;
};

struct DoubleSquare {
  Word host;
  std::size_t start = 1;
  std::size_t u_len = 0;
  std::size_t U_len = 0;

  std::string_view u() const { return host.view().substr(start - 1, u_len); }
  std::string_view U() const { return host.view().substr(start - 1, U_len); }
  // e(u_[1]) and e(U^2) in host coordinates.
  std::size_t end_first_u() const { return start + u_len - 1; }
  std::size_t end_U_square() const { return start + 2 * U_len - 1; }
};

// Checks that u^2 and U^2 both occur at start.
DoubleSquare make_double_square(const Word& host, std::size_t start,
                                std::size_t u_len, std::size_t U_len);

struct Factorization {
  std::string u1;
  std::string u2;
  std::size_t e1 = 0;
  std::size_t e2 = 0;
  std::string u2_bar;  // u1 = u2 u2_bar
  std::string u1_hat;  // u2_bar u2

  std::string u() const;
  std::string U() const;
  std::size_t u_len() const { return e1 * u1.size() + u2.size(); }
  std::size_t U_len() const { return (e1 + e2) * u1.size() + u2.size(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Builds the derived fields from (u1, u2, e1, e2) and checks the invariants.
Factorization make_factorization(std::string u1, std::string u2,
                                 std::size_t e1, std::size_t e2);

struct FsDoubleSquare {
  DoubleSquare square;
  Factorization factors;
};

// True iff (u, U) is a balanced double square: u^2 is a prefix of U^2 and
// |u| < |U| < 2|u|.
bool is_balanced_double_square(std::string_view u, std::string_view U);

struct FactorizableConditions {
  bool u_primitive = false;         // (a)
  bool U_primitive = false;         // (b)
  bool no_later_u_square = false;   // (c): u^2 occurs in U^2 only at 1

  bool any() const { return u_primitive || U_primitive || no_later_u_square; }
  std::string labels() const;  // subset of "abc"
};

// Throws std::invalid_argument("not a balanced double square").
FactorizableConditions check_factorizable(std::string_view u,
                                          std::string_view U);

// Constructive factorization: v1 = U past u, u1 = primitive root of v1,
// then e1 and u2 read off u. Throws std::invalid_argument with
// "not a balanced double square" or "not factorizable".
Factorization factorize(std::string_view u, std::string_view U);

// Every (w1, f1, w2, f2) with w1 primitive, w2 a non-trivial proper prefix of
// w1, f1 >= f2 >= 1, u = w1^f1 w2 and U = w1^f1 w2 w1^f2. Brute force.
std::vector<Factorization> factorization_candidates(std::string_view u,
                                                    std::string_view U);

// Every (w1, f1, w2) with w1 primitive, f1 >= min_exponent, w2 a non-trivial
// proper prefix of w1 and x = w1^f1 w2. Exponent f2 is left at 0.
std::vector<Factorization> periodic_decompositions(std::string_view x,
                                                   std::size_t min_exponent);

// Maximal left and right cyclic shifts of u^2: (lcs, lcp) of (u1, u1_hat).
struct ShiftBudget {
  std::size_t left = 0;
  std::size_t right = 0;
};
ShiftBudget shift_budget(const Factorization& f);

// Non-primitive shorter square u = v^k, k >= 2: checks e1 = e2 = 1,
// U = v^(2k-1) v1 with v1 a non-trivial proper prefix of v, u1 = v^(k-1) v1
// and v1 u2 = v. Throws std::invalid_argument when (u, U) is not
// factorizable or u is primitive.
bool verify_nonprimitive_case(std::string_view u, std::string_view U);

// Positions holding two rightmost squares, each with its factorization.
// Throws FalsificationError if any position holds three.
std::vector<FsDoubleSquare> find_fs_double_squares(const RightmostTable& t);
std::vector<FsDoubleSquare> find_fs_double_squares(const Word& w);

}  // namespace dsq
