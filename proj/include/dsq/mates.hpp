// Relations between two FS-double squares U and V of the same host with
// s(U) < s(V): gap/tail arithmetic, the five mate clauses, the type of a
// gamma-mate, and the case split for a single rightmost square after U.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "dsq/doublesq.hpp"
#include "dsq/squares.hpp"

namespace dsq {

enum class MateKind {
  alpha,
  beta,
  gamma,
  delta,
  epsilon,
  super_epsilon,
  unclassified,
};

std::string_view to_string(MateKind kind);
std::optional<MateKind> mate_kind_from_string(std::string_view name);

// gap = s(v) - s(u), tail = e(v) - e(u) for the shorter squares. The tail
// may be negative.
struct GapTail {
  long long gap = 0;
  long long tail = 0;
};

// Requires the same host and s(U) < s(V); throws std::invalid_argument.
GapTail gap_tail(const DoubleSquare& U, const DoubleSquare& V);

// Raw truth value of every clause, evaluated independently.
struct MateClauses {
  bool alpha = false;
  bool beta = false;
  bool gamma = false;
  bool delta = false;
  bool epsilon = false;
  bool super_epsilon = false;
  // The beta shape holds with exponent i == 1, which the beta clause
  // excludes (1 < i < e1) but the single-square case split allows.
  bool beta_exponent_one = false;

  int matched() const { return alpha + beta + gamma + delta + epsilon; }
};

// R1(U) in host coordinates.
std::size_t right_shift_limit(const FsDoubleSquare& U);

// Throws std::invalid_argument unless same host and s(U) < s(V).
MateClauses mate_clauses(const FsDoubleSquare& U, const FsDoubleSquare& V);

// First matching clause in the order alpha, beta, gamma, delta, epsilon;
// epsilon is refined to super_epsilon when e(u_[1]) < s(V).
MateKind classify(const MateClauses& clauses);
MateKind classify_mate(const FsDoubleSquare& U, const FsDoubleSquare& V);

struct GammaType {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t t = 0;  // p == e1(U) - t

  friend bool operator==(const GammaType&, const GammaType&) = default;
};

// Type of a gamma-mate V of U, read from the shape of v. Throws
// std::invalid_argument if the gamma clause does not hold or v matches
// neither shape.
GammaType gamma_type(const FsDoubleSquare& U, const DoubleSquare& V);

// Case split for a rightmost square v^2 with s(U) <= s(v) < R1(U). `none`
// means the case selected by |v| does not have the required shape.
enum class VCase { a1, a2, a3, a4, a5, none };

std::string_view to_string(VCase c);

VCase v_case(const FsDoubleSquare& U, const SquareOcc& v);

// True iff v = w1^i w2 for a conjugate w1 of u1 obtained by a cyclic shift
// (either direction), w2 its prefix of length |u2|.
bool is_shifted_power(std::string_view v, const Factorization& f,
                      std::size_t i);

// Either s1 u2_bar u2 u1^(e1+e2-1) u2 (s1 a suffix of u2) or
// s1 u1^i u2 u1^(e1+e2-1) u2 (s1 a suffix of u1, i >= 1) is a prefix of v.
// With `shifted`, u1 and u2 may also be replaced by their right cyclic shifts
// by up to lcp(u1, u1_hat) positions.
bool has_long_mate_prefix(std::string_view v, const Factorization& f,
                          bool shifted = false);

// host[start..start+len-1] can be cyclically shifted right by k positions.
bool can_shift_right(std::string_view host, std::size_t start,
                     std::size_t len, std::size_t k);

}  // namespace dsq
