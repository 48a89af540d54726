#pragma once

#include "lpat/bigint.hpp"
#include "lpat/words.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace lpat {

/// Exact rate r = num/den in [0, 1].
class RationalRate {
 public:
  /// DomainError unless 0 <= num <= den and den >= 1.
  RationalRate(const BigInt& num, const BigInt& den);
  explicit RationalRate(const Rational& r);
  /// Parses "NUM/DEN".
  static RationalRate parse(std::string_view text);

  const Rational& value() const noexcept { return r_; }
  BigInt num() const { return r_.get_num(); }
  BigInt den() const { return r_.get_den(); }

 private:
  Rational r_;
};

/// Parameters of the lower-bound word for 2/5 < r < 1:
/// p = ceil((5r - 2) / (1 - r)) and alpha = p - (5r - 2) / (1 - r) in [0, 1).
struct LowerBoundParams {
  std::uint64_t p = 0;
  Rational alpha;

  /// alpha_i, the i-th bit (i >= 1) of the binary expansion of alpha that
  /// has infinitely many zeroes, by exact long division.
  int alpha_bit(std::size_t i) const;
  std::vector<int> alpha_bits(std::size_t count) const;
};

/// DomainError unless 2/5 < r < 1.
LowerBoundParams lower_bound_params(const RationalRate& r);

/// The finite block w<i> = w<i-1> w<i-1> 01011 0^(p - alpha_i), w<0> empty.
BinaryWord lower_bound_block(const LowerBoundParams& params, std::size_t i);

/// Prefix of the word with zero rate r and pattern rate (5r - 2)/3.
/// r = 2/5 gives (01011)^inf, r = 1 gives 0^inf. DomainError for r < 2/5.
BinaryWord lower_bound_word(const RationalRate& r, std::size_t len);

/// Exact length, zero count and pattern count of w<i>.
struct BlockStats {
  BigInt length;    // l_i
  BigInt zeros;     // zeta_i
  BigInt patterns;  // pi_i
};

/// Closed forms, with S = sum_{j<=i} 2^(i-j) alpha_j:
///   l_i    = (2^i - 1)(p + 5) - S
///   zeta_i = (2^i - 1)(p + 2) - S
///   pi_i   = (2^i - 1) p - 1 - S + [p == 1] alpha_i
BlockStats lemma14_stats(std::size_t i, const LowerBoundParams& params);

/// 5 zeta_i - 2 l_i == 3 pi_i + 3 - 3 [p == 1] alpha_i, evaluated on `stats`.
bool lemma14_identity_holds(std::size_t i, const LowerBoundParams& params,
                            const BlockStats& stats);

/// delta_1 .. delta_count of the upper-bound construction:
/// delta_k = 1 iff (sum_{i<k} 2 i delta_i + 2k) / (k(k+1)) <= r.
std::vector<int> upper_bound_deltas(const RationalRate& r, std::size_t count);

/// Prefix of the word whose k-th block is (1 - delta_k) repeated 2k times.
/// Both its zero rate and its pattern rate tend to r.
BinaryWord upper_bound_word(const RationalRate& r, std::size_t len);

/// sum_{i<=k} 2 i delta_i / (k(k+1)); never exceeds r. DomainError for k == 0.
Rational running_partial_sums(const RationalRate& r, std::size_t k);

/// Streams the lower-bound word, deepening the recursion on demand.
class LowerBoundStream final : public WordSource {
 public:
  explicit LowerBoundStream(const RationalRate& r);
  int next() override;

 private:
  enum class Mode { periodic, recursive };
  Mode mode_;
  BinaryWord period_;
  LowerBoundParams params_;
  BinaryWord built_;  // w<depth_>
  std::size_t depth_ = 0;
  std::size_t pos_ = 0;
};

/// Streams the upper-bound word block by block.
class UpperBoundStream final : public WordSource {
 public:
  explicit UpperBoundStream(const RationalRate& r);
  int next() override;

 private:
  Rational r_;
  BigInt zero_weight_;  // sum_{i<k} 2 i delta_i
  std::size_t k_ = 0;   // current block index
  std::size_t left_ = 0;
  int symbol_ = 1;
};

}  // namespace lpat
