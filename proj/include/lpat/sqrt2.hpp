#pragma once

#include "lpat/bigint.hpp"
#include "lpat/words.hpp"

#include <cstddef>

namespace lpat {

/// Default cap on the number of fractional bits of sqrt(2) we will produce.
inline constexpr std::size_t kDefaultMaxSqrt2Bits = std::size_t{1} << 26;

/// Prefix b_1 ... b_k of the fractional binary expansion sqrt(2) = (1.b_1 b_2 ...)_2.
///
/// Holds the exact integer V = floor(2^k * sqrt(2)), whose low k bits are
/// the fractional bits; V^2 <= 2 * 4^k < (V + 1)^2.
class DyadicBits {
 public:
  explicit DyadicBits(BigInt scaled);

  std::size_t precision() const noexcept { return bits_.size(); }
  /// b_i, 1 <= i <= precision(). Unchecked.
  int operator[](std::size_t i) const noexcept { return bits_[i]; }
  int at(std::size_t i) const { return bits_.at(i); }

  /// The bits as a word b^(k).
  const BinaryWord& word() const noexcept { return bits_; }
  /// floor(2^k * sqrt(2)).
  const BigInt& scaled_value() const noexcept { return scaled_; }

 private:
  BigInt scaled_;
  BinaryWord bits_;
};

/// First k fractional bits of sqrt(2), computed as the low k bits of
/// isqrt(2^(2k+1)). DomainError for k == 0, ResourceLimitError for k > max_bits.
DyadicBits sqrt2_fraction_bits(std::size_t k, std::size_t max_bits = kDefaultMaxSqrt2Bits);

/// Streams b_1 b_2 ... by recomputing with doubled precision on demand.
class Sqrt2Stream final : public WordSource {
 public:
  explicit Sqrt2Stream(std::size_t initial_precision = 4096,
                       std::size_t max_bits = kDefaultMaxSqrt2Bits);
  int next() override;

 private:
  DyadicBits bits_;
  std::size_t max_bits_;
  std::size_t pos_ = 0;
};

}  // namespace lpat
