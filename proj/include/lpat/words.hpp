#pragma once

#include "lpat/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lpat {

/// Finite word over {0,1} stored as packed bits.
///
/// All positional accessors are 1-indexed: `w[1]` is the first symbol and
/// `w[size()]` the last, matching the usual w_1 w_2 ... w_l notation.
/// Ordering is lexicographic; for words of equal length this is the
/// order used by the transformation maps.
class BinaryWord {
 public:
  BinaryWord() = default;
  /// `n` copies of `symbol`.
  BinaryWord(std::size_t n, int symbol);

  /// Parses ASCII '0'/'1'. Any other character is a DomainError.
  static BinaryWord from_string(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Symbol w_i, 1 <= i <= size(). Unchecked.
  int operator[](std::size_t i) const noexcept {
    const std::size_t k = i - 1;
    return static_cast<int>((blocks_[k >> 6] >> (k & 63)) & 1u);
  }
  /// Symbol w_i with range check (DomainError when out of range).
  int at(std::size_t i) const;
  void set(std::size_t i, int symbol);

  void push_back(int symbol);
  void append(const BinaryWord& tail);
  void append(std::size_t count, int symbol);

  /// w^(k), the initial subword of length k (k <= size()).
  BinaryWord prefix(std::size_t k) const;
  /// w_[i,j]; empty when j < i.
  BinaryWord subword(std::size_t i, std::size_t j) const;
  /// w^j, j-fold concatenation.
  BinaryWord repeat(std::size_t j) const;

  std::size_t count_zeros() const noexcept;
  std::size_t count_ones() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) noexcept {
    return a.size_ == b.size_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept;

  friend BinaryWord operator+(BinaryWord a, const BinaryWord& b) {
    a.append(b);
    return a;
  }

 private:
  // bit (i-1) of the concatenated blocks holds w_i; bits past size_ are zero
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

/// Shorthand for BinaryWord::from_string.
BinaryWord word(std::string_view text);

/// Z(w): positions i with w_i = 0, ascending.
std::vector<std::size_t> zero_indices(const BinaryWord& w);

/// Membership test i in P(w), with the finite-length guards
/// (a pattern straddling the end of the word does not count).
bool is_pattern_index(const BinaryWord& w, std::size_t i);

/// P(w): positions i >= 2 where 00 ends at i, or 0100 / 01010 starts at i-1.
std::vector<std::size_t> pattern_indices(const BinaryWord& w);

/// |P(w)| without materializing the set.
std::size_t count_pattern_indices(const BinaryWord& w);

/// c[n] = |P(w^(n))| for every 0 <= n <= w.size(), in one pass.
/// Index i joins the prefix count once the pattern that puts it in P is
/// fully inside the prefix.
std::vector<std::size_t> prefix_pattern_counts(const BinaryWord& w);

/// Prefix counts and their exact rates.
struct RateEstimate {
  std::size_t n = 0;
  std::size_t z_count = 0;
  std::size_t p_count = 0;
  Rational z_rate;  // z_count / n, 0 when n == 0
  Rational p_rate;  // p_count / n, 0 when n == 0
};

/// Pull-based infinite (or very long) word. Single consumer.
class WordSource {
 public:
  virtual ~WordSource() = default;
  /// Next symbol, 0 or 1.
  virtual int next() = 0;
};

/// Infinite repetition of a nonempty period.
class PeriodicWord final : public WordSource {
 public:
  explicit PeriodicWord(BinaryWord period);
  int next() override;

 private:
  BinaryWord period_;
  std::size_t pos_ = 0;
};

/// Pulls the next `n` symbols.
BinaryWord take(WordSource& source, std::size_t n);

/// Rates over w^(n). DomainError when n > w.size().
RateEstimate prefix_rates(const BinaryWord& w, std::size_t n);
/// Rates over the first n symbols pulled from `source`.
RateEstimate prefix_rates(WordSource& source, std::size_t n);

}  // namespace lpat
