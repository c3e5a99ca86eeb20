#include "dsq/enumerate.hpp"

namespace dsq {

bool is_canonical(std::string_view w) {
  char next = 'a';
  for (char c : w) {
    if (c > next || c < 'a') return false;
    if (c == next) ++next;
  }
  return true;
}

std::size_t symbol_count(std::string_view w) {
  bool seen[256] = {};
  std::size_t count = 0;
  for (unsigned char c : w) {
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::string> canonical_words(std::size_t len,
                                         std::size_t max_symbols) {
  std::vector<std::string> out;
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  if (max_symbols == 0) return out;
  std::string word;
  walk_canonical(word, len, max_symbols, [&](const std::string& w) {
    if (w.size() == len) out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace dsq
