#include "dsq/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <stdexcept>

#include "dsq/enumerate.hpp"

namespace dsq {

using nlohmann::json;

namespace {

constexpr std::size_t max_n = 64;

// Depth-first extension of a canonical prefix. Squares are counted at the
// end of their leftmost occurrence, so appending a symbol adds exactly the
// squares ending there that have no earlier occurrence. At most two such
// squares end at any position (mirror of the two-rightmost-squares
// theorem), which bounds what the remaining positions can still add.
class Searcher {
 public:
  Searcher(std::size_t d, std::size_t n, std::atomic<std::size_t>& best)
      : d_(d), n_(n), best_(best) {}

  json run(const std::string& prefix) {
    for (char c : prefix) push(c);
    if (!prune()) descend();
    json witnesses = json::array();
    for (const auto& w : witnesses_) witnesses.push_back(w);
    return json{{"sigma", found_ ? json(local_best_) : json(nullptr)},
                {"witnesses", witnesses}};
  }

 private:
  void push(char c) {
    const std::size_t m = len_;
    w_[m] = c;
    if (c > top_) top_ = c;
    top_stack_[m] = top_;
    for (std::size_t L = 1; L <= m; ++L) {
      runs_[m][L] = w_[m] == w_[m - L] ? (L <= m - 1 ? runs_[m - 1][L] : 0) + 1 : 0;
    }
    std::size_t gain = 0;
    for (std::size_t L = 1; 2 * L <= m + 1; ++L) {
      if (runs_[m][L] < L || !primitive_at(m, L) || seen_before(m, L)) continue;
      ++gain;
    }
    count_[m] = (m == 0 ? 0 : count_[m - 1]) + gain;
    ++len_;
  }

  void pop() {
    --len_;
    top_ = len_ == 0 ? 'a' - 1 : top_stack_[len_ - 1];
  }

  bool primitive_at(std::size_t m, std::size_t L) const {
    for (std::size_t p = 1; p < L; ++p) {
      if (L % p == 0 && runs_[m][p] >= L - p) return false;
    }
    return true;
  }

  // The square of half-length L ending at m also ends at some m' < m.
  bool seen_before(std::size_t m, std::size_t L) const {
    const char* g = w_ + (m + 1 - L);
    for (std::size_t e = 2 * L - 1; e < m; ++e) {
      if (runs_[e][L] >= L && std::memcmp(w_ + (e + 1 - L), g, L) == 0) {
        return true;
      }
    }
    return false;
  }

  std::size_t used() const { return static_cast<std::size_t>(top_ - 'a' + 1); }

  bool prune() const {
    const std::size_t remaining = n_ - len_;
    if (used() + remaining < d_) return true;
    const std::size_t count = len_ == 0 ? 0 : count_[len_ - 1];
    return count + 2 * remaining < best_.load(std::memory_order_relaxed);
  }

  void descend() {
    if (len_ == n_) {
      leaf();
      return;
    }
    const char limit = used() < d_ ? static_cast<char>(top_ + 1) : top_;
    for (char c = 'a'; c <= limit; ++c) {
      push(c);
      if (!prune()) descend();
      pop();
    }
  }

  void leaf() {
    const std::size_t count = count_[n_ - 1];
    if (found_ && count < local_best_) return;
    if (!found_ || count > local_best_) {
      found_ = true;
      local_best_ = count;
      witnesses_.clear();
      std::size_t seen = best_.load();
      while (seen < count && !best_.compare_exchange_weak(seen, count)) {
      }
    }
    if (witnesses_.size() < max_witnesses) {
      witnesses_.emplace_back(w_, n_);
    }
  }

  std::size_t d_;
  std::size_t n_;
  std::atomic<std::size_t>& best_;
  char w_[max_n] = {};
  char top_ = 'a' - 1;
  char top_stack_[max_n] = {};
  std::size_t len_ = 0;
  unsigned char runs_[max_n][max_n] = {};
  std::size_t count_[max_n] = {};
  bool found_ = false;
  std::size_t local_best_ = 0;
  std::vector<std::string> witnesses_;
};

std::size_t prefix_length(std::size_t n) { return std::min<std::size_t>(n, 8); }

}  // namespace

SearchResult sigma_search(std::size_t d, std::size_t n,
                          const ShardOptions& options) {
  if (d < 1 || d > 26) throw std::invalid_argument("alphabet size must be in 1..26");
  if (d > n) throw std::invalid_argument("alphabet size exceeds length");
  if (n >= max_n) throw std::invalid_argument("length too large for search");

  const std::size_t k = prefix_length(n);
  std::vector<std::string> shards;
  for (auto& p : canonical_words(k, d)) {
    if (symbol_count(p) + (n - k) >= d) shards.push_back(std::move(p));
  }

  std::atomic<std::size_t> best{0};
  const json signature{{"kind", "sigma_search"}, {"d", d}, {"n", n}};
  auto work = [&](std::size_t i) {
    Searcher s(d, n, best);
    return s.run(shards[i]);
  };
  const auto parts = run_shards(shards, signature, work, options);

  SearchResult r;
  r.d = d;
  r.n = n;
  bool any = false;
  for (const auto& part : parts) {
    if (part.at("sigma").is_null()) continue;
    const auto sigma = part.at("sigma").get<std::size_t>();
    if (!any || sigma > r.sigma) {
      any = true;
      r.sigma = sigma;
      r.witnesses.clear();
    }
    if (sigma < r.sigma) continue;
    for (const auto& w : part.at("witnesses")) {
      if (r.witnesses.size() < max_witnesses) {
        r.witnesses.push_back(w.get<std::string>());
      }
    }
  }
  return r;
}

json to_json(const SearchResult& r) {
  return json{{"schema_version", 1},
              {"d", r.d},
              {"n", r.n},
              {"sigma", r.sigma},
              {"bound", r.n - r.d},
              {"conjecture_holds", r.conjecture_holds()},
              {"witnesses", r.witnesses}};
}

}  // namespace dsq
