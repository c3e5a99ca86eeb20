#include "dsq/mates.hpp"

#include <stdexcept>
#include <string>

#include "dsq/inversion.hpp"

namespace dsq {

namespace {

void require_ordered(const DoubleSquare& U, const DoubleSquare& V) {
  if (!(U.host == V.host)) {
    throw std::invalid_argument("double squares belong to different hosts");
  }
  if (U.start >= V.start) {
    throw std::invalid_argument("mate must start strictly after U");
  }
}

bool starts_with(std::string_view text, std::string_view prefix) {
  return prefix.size() <= text.size() && text.substr(0, prefix.size()) == prefix;
}

}  // namespace

std::string_view to_string(MateKind kind) {
  switch (kind) {
    case MateKind::alpha: return "alpha";
    case MateKind::beta: return "beta";
    case MateKind::gamma: return "gamma";
    case MateKind::delta: return "delta";
    case MateKind::epsilon: return "epsilon";
    case MateKind::super_epsilon: return "super_epsilon";
    case MateKind::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::optional<MateKind> mate_kind_from_string(std::string_view name) {
  for (auto kind : {MateKind::alpha, MateKind::beta, MateKind::gamma,
                    MateKind::delta, MateKind::epsilon,
                    MateKind::super_epsilon, MateKind::unclassified}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(VCase c) {
  switch (c) {
    case VCase::a1: return "a1";
    case VCase::a2: return "a2";
    case VCase::a3: return "a3";
    case VCase::a4: return "a4";
    case VCase::a5: return "a5";
    case VCase::none: return "none";
  }
  return "none";
}

GapTail gap_tail(const DoubleSquare& U, const DoubleSquare& V) {
  require_ordered(U, V);
  const auto gap = static_cast<long long>(V.start) - static_cast<long long>(U.start);
  const auto tail = static_cast<long long>(V.end_first_u()) -
                    static_cast<long long>(U.end_first_u());
  return GapTail{gap, tail};
}

bool can_shift_right(std::string_view host, std::size_t start,
                     std::size_t len, std::size_t k) {
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t idx = start - 1 + t;
    if (idx + len >= host.size() || host[idx] != host[idx + len]) return false;
  }
  return true;
}

bool is_shifted_power(std::string_view v, const Factorization& f,
                      std::size_t i) {
  const std::size_t p = f.u1.size();
  if (v.size() != i * p + f.u2.size()) return false;
  for (bool rightward : {true, false}) {
    for (std::size_t k = 0; k < p; ++k) {
      const std::string hat = rightward ? rotate_left(f.u1, k) : rotate_right(f.u1, k);
      if (v == power(hat, i) + hat.substr(0, f.u2.size())) return true;
    }
  }
  return false;
}

bool has_long_mate_prefix(std::string_view v, const Factorization& f,
                          bool shifted) {
  const std::size_t shifts = shifted ? shift_budget(f).right : 0;
  for (std::size_t k = 0; k <= shifts; ++k) {
    const std::string u1 = rotate_left(f.u1, k);
    const std::string u2 = (f.u2 + f.u1).substr(k, f.u2.size());
    const std::string u2_bar = u1.substr(u2.size());
    const std::string core = u2 + power(u1, f.e1 + f.e2 - 1) + u2;
    for (std::size_t s = 0; s <= u2.size(); ++s) {
      if (starts_with(v, u2.substr(u2.size() - s) + u2_bar + core)) return true;
    }
    for (std::size_t s = 0; s <= u1.size(); ++s) {
      const std::string s1 = u1.substr(u1.size() - s);
      for (std::size_t i = 1;; ++i) {
        const std::string pattern = s1 + power(u1, i) + core;
        if (pattern.size() > v.size()) break;
        if (starts_with(v, pattern)) return true;
      }
    }
  }
  return false;
}

std::size_t right_shift_limit(const FsDoubleSquare& U) {
  return U.square.start - 1 + intervals(U.factors).R1;
}

MateClauses mate_clauses(const FsDoubleSquare& U, const FsDoubleSquare& V) {
  require_ordered(U.square, V.square);
  const auto& f = U.factors;
  const std::string_view host = U.square.host.view();
  const std::size_t sU = U.square.start;
  const std::size_t sV = V.square.start;
  const std::size_t shift = sV - sU;
  const std::size_t v_len = V.square.u_len;
  const std::size_t V_len = V.square.U_len;
  const std::size_t R1 = right_shift_limit(U);
  const auto budget = shift_budget(f);

  MateClauses c;
  c.alpha = sV <= sU + budget.right && v_len == U.square.u_len &&
            V_len == U.square.U_len &&
            can_shift_right(host, sU, 2 * U.square.u_len, shift) &&
            can_shift_right(host, sU, 2 * U.square.U_len, shift);

  const bool beta_frame = sV < R1 && V_len == U.square.U_len &&
                          can_shift_right(host, sU, 2 * U.square.U_len, shift);
  if (beta_frame) {
    const std::string_view v = V.square.u();
    for (std::size_t i = 1; i < f.e1; ++i) {
      if (!is_shifted_power(v, f, i)) continue;
      if (i == 1) {
        c.beta_exponent_one = true;
      } else {
        c.beta = true;
      }
    }
  }

  c.gamma = sV < sU + f.e1 * f.u1.size() && v_len == U.square.U_len;
  c.delta = sV < R1 && v_len > U.square.U_len &&
            has_long_mate_prefix(V.square.u(), f);
  c.epsilon = R1 <= sV;
  c.super_epsilon = c.epsilon && U.square.end_first_u() < sV;
  return c;
}

MateKind classify(const MateClauses& c) {
  if (c.alpha) return MateKind::alpha;
  if (c.beta) return MateKind::beta;
  if (c.gamma) return MateKind::gamma;
  if (c.delta) return MateKind::delta;
  if (c.super_epsilon) return MateKind::super_epsilon;
  if (c.epsilon) return MateKind::epsilon;
  return MateKind::unclassified;
}

MateKind classify_mate(const FsDoubleSquare& U, const FsDoubleSquare& V) {
  return classify(mate_clauses(U, V));
}

GammaType gamma_type(const FsDoubleSquare& U, const DoubleSquare& V) {
  require_ordered(U.square, V);
  const auto& f = U.factors;
  if (!(V.start < U.square.start + f.e1 * f.u1.size() &&
        V.u_len == U.square.U_len)) {
    throw std::invalid_argument("not a gamma-mate");
  }
  const std::string_view v = V.u();
  const std::size_t p = f.u1.size();
  const std::size_t left_budget = shift_budget(f).left;
  for (std::size_t t = 0; t < f.e1; ++t) {
    const std::size_t head = f.e1 - t;
    const std::size_t tail = f.e2 + t;
    if (v == power(f.u1, head) + f.u2 + power(f.u1, tail)) {
      return GammaType{head, tail, t};
    }
    for (std::size_t cut = 1; cut < p; ++cut) {
      const std::string s1 = f.u1.substr(0, cut);
      const std::string s2 = f.u1.substr(cut);
      if (v != s2 + power(f.u1, head - 1) + f.u2 + power(f.u1, tail) + s1) {
        continue;
      }
      if (cut <= p - left_budget) return GammaType{head, tail, t};
      return GammaType{head - 1, tail + 1, t + 1};
    }
  }
  throw std::invalid_argument("not a gamma-mate");
}

VCase v_case(const FsDoubleSquare& U, const SquareOcc& v) {
  const auto& f = U.factors;
  const std::size_t u_len = U.square.u_len;
  const std::size_t U_len = U.square.U_len;
  const std::string_view content =
      U.square.host.view().substr(v.start - 1, v.gen_len);
  const auto tail = static_cast<long long>(v.start + v.gen_len) -
                    static_cast<long long>(U.square.start + u_len);

  if (v.gen_len < u_len) {
    for (std::size_t j = 1; j < f.e1; ++j) {
      if (is_shifted_power(content, f, j)) return VCase::a1;
    }
    return VCase::none;
  }
  if (v.gen_len == u_len) {
    return is_shifted_power(content, f, f.e1) ? VCase::a2 : VCase::none;
  }
  if (v.gen_len < U_len) return VCase::a3;
  if (v.gen_len == U_len) return tail >= 0 ? VCase::a4 : VCase::none;
  return tail >= 0 && has_long_mate_prefix(content, f, true) ? VCase::a5
                                                        : VCase::none;
}

}  // namespace dsq
