// Canonical words: the first occurrences of symbols appear in alphabet order,
// so "abca" is canonical and "baab" is not. Every word is a renaming of
// exactly one canonical word.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dsq {

bool is_canonical(std::string_view w);

// Number of distinct symbols.
std::size_t symbol_count(std::string_view w);

// Canonical words of length len over at most max_symbols symbols, in
// lexicographic order.
std::vector<std::string> canonical_words(std::size_t len,
                                         std::size_t max_symbols);

// Depth-first walk over the canonical words extending `word` (itself
// included) up to max_len symbols, using at most max_symbols symbols, in
// lexicographic order. visit(const std::string&) returning false prunes
// the subtree below that word.
template <class Visit>
void walk_canonical(std::string& word, std::size_t max_len,
                    std::size_t max_symbols, Visit&& visit) {
  if (!visit(static_cast<const std::string&>(word))) return;
  if (word.size() >= max_len) return;
  char top = 'a' - 1;
  for (char c : word) top = c > top ? c : top;
  const std::size_t used = static_cast<std::size_t>(top - 'a' + 1);
  const char limit = static_cast<char>(
      used < max_symbols ? top + 1 : top);
  for (char c = 'a'; c <= limit; ++c) {
    word.push_back(c);
    walk_canonical(word, max_len, max_symbols, visit);
    word.pop_back();
  }
}

}  // namespace dsq
