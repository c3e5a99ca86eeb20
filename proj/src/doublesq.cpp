#include "dsq/doublesq.hpp"

#include <stdexcept>

namespace dsq {

namespace {

bool square_at(std::string_view w, std::size_t start, std::size_t len) {
  if (start == 0 || len == 0 || start - 1 + 2 * len > w.size()) return false;
  return w.substr(start - 1, len) == w.substr(start - 1 + len, len);
}

// x is a prefix of the infinite power of the first p symbols of x.
bool has_period(std::string_view x, std::size_t p) {
  return p == 0 || p >= x.size() || x.substr(0, x.size() - p) == x.substr(p);
}

}  // namespace

DoubleSquare make_double_square(const Word& host, std::size_t start,
                                std::size_t u_len, std::size_t U_len) {
  if (u_len >= U_len || !square_at(host.view(), start, u_len) ||
      !square_at(host.view(), start, U_len)) {
    throw std::invalid_argument("no double square (" + std::to_string(u_len) +
                                ", " + std::to_string(U_len) + ") at " +
                                std::to_string(start));
  }
  return DoubleSquare{host, start, u_len, U_len};
}

std::string Factorization::u() const { return power(u1, e1) + u2; }

std::string Factorization::U() const { return u() + power(u1, e2); }

Factorization make_factorization(std::string u1, std::string u2,
                                 std::size_t e1, std::size_t e2) {
  if (u2.empty() || u2.size() >= u1.size() || u1.compare(0, u2.size(), u2) != 0) {
    throw std::invalid_argument("u2 must be a non-trivial proper prefix of u1");
  }
  if (!is_primitive(u1)) throw std::invalid_argument("u1 must be primitive");
  if (e2 < 1 || e1 < e2) throw std::invalid_argument("need e1 >= e2 >= 1");
  Factorization f;
  f.u2_bar = u1.substr(u2.size());
  f.u1_hat = f.u2_bar + u2;
  f.u1 = std::move(u1);
  f.u2 = std::move(u2);
  f.e1 = e1;
  f.e2 = e2;
  return f;
}

bool is_balanced_double_square(std::string_view u, std::string_view U) {
  if (u.empty() || u.size() >= U.size() || U.size() >= 2 * u.size()) {
    return false;
  }
  // u u is a prefix of U U: u is a prefix of U, and the second u reads
  // (U past u) followed by a prefix of U.
  const std::size_t overhang = U.size() - u.size();
  return U.substr(0, u.size()) == u &&
         U.substr(u.size()) == u.substr(0, overhang) &&
         U.substr(0, u.size() - overhang) == u.substr(overhang);
}

std::string FactorizableConditions::labels() const {
  std::string out;
  if (u_primitive) out += 'a';
  if (U_primitive) out += 'b';
  if (no_later_u_square) out += 'c';
  return out;
}

FactorizableConditions check_factorizable(std::string_view u,
                                          std::string_view U) {
  if (!is_balanced_double_square(u, U)) {
    throw std::invalid_argument("not a balanced double square");
  }
  FactorizableConditions c;
  c.u_primitive = is_primitive(u);
  c.U_primitive = is_primitive(U);
  const std::string u_sq = std::string(u) + std::string(u);
  const std::string U_sq = std::string(U) + std::string(U);
  c.no_later_u_square = occurrences(u_sq, U_sq).size() == 1;
  return c;
}

Factorization factorize(std::string_view u, std::string_view U) {
  if (!check_factorizable(u, U).any()) {
    throw std::invalid_argument("not factorizable");
  }
  const std::string_view v1 = U.substr(u.size());
  const std::size_t root = root_length(v1);
  const std::string_view u1 = v1.substr(0, root);
  if (!has_period(u, root) || u.substr(0, root) != u1) {
    throw std::invalid_argument("not factorizable");
  }
  const std::size_t e1 = u.size() / root;
  const std::size_t e2 = v1.size() / root;
  const std::string_view u2 = u.substr(e1 * root);
  if (u2.empty() || e2 > e1) throw std::invalid_argument("not factorizable");
  return make_factorization(std::string(u1), std::string(u2), e1, e2);
}

std::vector<Factorization> periodic_decompositions(std::string_view x,
                                                   std::size_t min_exponent) {
  std::vector<Factorization> out;
  for (std::size_t len = 2; len < x.size(); ++len) {
    const std::size_t f1 = x.size() / len;
    if (f1 < std::max<std::size_t>(min_exponent, 1)) break;
    if (x.size() % len == 0 || !has_period(x, len)) continue;
    const std::string_view w1 = x.substr(0, len);
    if (!is_primitive(w1)) continue;
    Factorization f;
    f.u1 = std::string(w1);
    f.u2 = std::string(x.substr(f1 * len));
    f.e1 = f1;
    f.u2_bar = f.u1.substr(f.u2.size());
    f.u1_hat = f.u2_bar + f.u2;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Factorization> factorization_candidates(std::string_view u,
                                                    std::string_view U) {
  std::vector<Factorization> out;
  if (U.size() <= u.size() || U.substr(0, u.size()) != u) return out;
  const std::string_view tail = U.substr(u.size());
  for (auto f : periodic_decompositions(u, 1)) {
    const std::size_t len = f.u1.size();
    if (tail.size() % len != 0) continue;
    const std::size_t f2 = tail.size() / len;
    if (f2 < 1 || f2 > f.e1 || tail != power(f.u1, f2)) continue;
    f.e2 = f2;
    out.push_back(std::move(f));
  }
  return out;
}

ShiftBudget shift_budget(const Factorization& f) {
  return ShiftBudget{lcs(f.u1, f.u1_hat), lcp(f.u1, f.u1_hat)};
}

bool verify_nonprimitive_case(std::string_view u, std::string_view U) {
  const Factorization f = factorize(u, U);
  const std::size_t v_len = root_length(u);
  const std::size_t k = u.size() / v_len;
  if (k < 2) throw std::invalid_argument("shorter generator is primitive");
  const std::string_view v = u.substr(0, v_len);
  if (f.e1 != 1 || f.e2 != 1) return false;
  const std::size_t body = (2 * k - 1) * v_len;
  if (U.size() <= body || U.size() >= body + v_len) return false;
  const std::string_view v1 = U.substr(body);
  if (U.substr(0, body) != power(v, 2 * k - 1) || v.substr(0, v1.size()) != v1) {
    return false;
  }
  return f.u1 == power(v, k - 1) + std::string(v1) &&
         std::string(v1) + f.u2 == v;
}

std::vector<FsDoubleSquare> find_fs_double_squares(const RightmostTable& t) {
  if (auto overfull = t.overfull_positions(); !overfull.empty()) {
    throw FalsificationError(
        "three rightmost squares start at position " +
            std::to_string(overfull.front()) + " of " + t.host().str(),
        std::move(overfull));
  }
  std::vector<FsDoubleSquare> out;
  const auto squares = t.squares();
  for (std::size_t i = 0; i + 1 < squares.size(); ++i) {
    if (squares[i].start != squares[i + 1].start) continue;
    DoubleSquare ds{t.host(), squares[i].start, squares[i].gen_len,
                    squares[i + 1].gen_len};
    Factorization f = factorize(ds.u(), ds.U());
    out.push_back(FsDoubleSquare{std::move(ds), std::move(f)});
  }
  return out;
}

std::vector<FsDoubleSquare> find_fs_double_squares(const Word& w) {
  return find_fs_double_squares(rightmost_table(w));
}

}  // namespace dsq
