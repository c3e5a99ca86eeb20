// Words over a-z and the primitive operations the rest of the library builds
// on. Every position that crosses the public API is 1-based and inclusive.

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dsq {

// Immutable symbol sequence. Copies share storage, so factors and tables can
// keep a handle to their host without duplicating it.
class Word {
 public:
  Word();
  explicit Word(std::string_view symbols);

  std::size_t size() const { return data_->size(); }
  bool empty() const { return data_->empty(); }

  std::string_view view() const { return *data_; }
  const std::string& str() const { return *data_; }
  operator std::string_view() const { return *data_; }

  // 1-based access; throws std::out_of_range.
  char at(std::size_t pos) const;

  // Content of host[start..end] as a new word (1-based, inclusive).
  Word slice(std::size_t start, std::size_t end) const;

  bool shares_storage(const Word& other) const { return data_ == other.data_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.data_ == b.data_ || *a.data_ == *b.data_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.view() <=> b.view();
  }

 private:
  std::shared_ptr<const std::string> data_;
};

// True iff every symbol is in a-z.
bool is_valid_symbols(std::string_view symbols);

// host[start..end], 1-based inclusive.
struct Factor {
  Word host;
  std::size_t start = 1;
  std::size_t end = 0;

  std::size_t length() const { return end + 1 - start; }
  std::string_view content() const {
    return host.view().substr(start - 1, length());
  }
};

Factor make_factor(const Word& host, std::size_t start, std::size_t end);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

// Smallest p dividing |w| such that w has period p. Requires non-empty w.
std::size_t root_length(std::string_view w);

PrimitiveRoot primitive_root(std::string_view w);
bool is_primitive(std::string_view w);
bool are_conjugates(std::string_view x, std::string_view y);

std::size_t lcp(std::string_view x, std::string_view y);
std::size_t lcs(std::string_view x, std::string_view y);

// Sorted 1-based start positions of pattern in text, overlaps included.
std::vector<std::size_t> occurrences(std::string_view pattern,
                                     std::string_view text);

std::string power(std::string_view x, std::size_t k);

// x[k..] x[..k]: the content of x after a right cyclic shift by k positions
// inside the periodic extension of x.
std::string rotate_left(std::string_view x, std::size_t k);
std::string rotate_right(std::string_view x, std::size_t k);

}  // namespace dsq
