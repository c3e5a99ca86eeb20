#include "dsq/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsq {

namespace {

const std::shared_ptr<const std::string>& empty_storage() {
  static const auto storage = std::make_shared<const std::string>();
  return storage;
}

}  // namespace

bool is_valid_symbols(std::string_view symbols) {
  return std::all_of(symbols.begin(), symbols.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; });
}

Word::Word() : data_(empty_storage()) {}

Word::Word(std::string_view symbols) {
  if (!is_valid_symbols(symbols)) {
    throw std::invalid_argument("word contains a symbol outside a-z");
  }
  data_ = symbols.empty() ? empty_storage()
                          : std::make_shared<const std::string>(symbols);
}

char Word::at(std::size_t pos) const {
  if (pos == 0 || pos > size()) {
    throw std::out_of_range("position " + std::to_string(pos) +
                            " outside word of length " +
                            std::to_string(size()));
  }
  return (*data_)[pos - 1];
}

Word Word::slice(std::size_t start, std::size_t end) const {
  return Word(make_factor(*this, start, end).content());
}

Factor make_factor(const Word& host, std::size_t start, std::size_t end) {
  if (start == 0 || start > end || end > host.size()) {
    throw std::out_of_range("factor [" + std::to_string(start) + ".." +
                            std::to_string(end) + "] outside word of length " +
                            std::to_string(host.size()));
  }
  return Factor{host, start, end};
}

std::size_t root_length(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("empty word has no primitive root");
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    if (w.substr(0, n - p) == w.substr(p)) return p;
  }
  return n;
}

PrimitiveRoot primitive_root(std::string_view w) {
  const std::size_t p = root_length(w);
  return PrimitiveRoot{Word(w.substr(0, p)), w.size() / p};
}

bool is_primitive(std::string_view w) { return root_length(w) == w.size(); }

bool are_conjugates(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  std::string doubled;
  doubled.reserve(2 * x.size());
  doubled.append(x).append(x);
  return doubled.find(y) != std::string::npos;
}

std::size_t lcp(std::string_view x, std::string_view y) {
  const auto bound = std::min(x.size(), y.size());
  std::size_t k = 0;
  while (k < bound && x[k] == y[k]) ++k;
  return k;
}

std::size_t lcs(std::string_view x, std::string_view y) {
  const auto bound = std::min(x.size(), y.size());
  std::size_t k = 0;
  while (k < bound && x[x.size() - 1 - k] == y[y.size() - 1 - k]) ++k;
  return k;
}

std::vector<std::size_t> occurrences(std::string_view pattern,
                                     std::string_view text) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  std::vector<std::size_t> found;
  for (auto pos = text.find(pattern); pos != std::string_view::npos;
       pos = text.find(pattern, pos + 1)) {
    found.push_back(pos + 1);
  }
  return found;
}

std::string power(std::string_view x, std::size_t k) {
  std::string out;
  out.reserve(x.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.append(x);
  return out;
}

std::string rotate_left(std::string_view x, std::size_t k) {
  if (x.empty()) return {};
  k %= x.size();
  std::string out(x.substr(k));
  out.append(x.substr(0, k));
  return out;
}

std::string rotate_right(std::string_view x, std::size_t k) {
  if (x.empty()) return {};
  k %= x.size();
  return rotate_left(x, x.size() - k);
}

}  // namespace dsq
