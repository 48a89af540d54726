#include "lpat/sqrt2.hpp"

#include "lpat/errors.hpp"

#include <algorithm>
#include <utility>

namespace lpat {

DyadicBits::DyadicBits(BigInt scaled) : scaled_(std::move(scaled)) {
  const std::size_t width = mpz_sizeinbase(scaled_.get_mpz_t(), 2);
  if (sgn(scaled_) <= 0 || width < 2 || mpz_tstbit(scaled_.get_mpz_t(), width - 1) == 0)
    throw DomainError("scaled sqrt(2) value must have integer part 1");
  const std::size_t k = width - 1;
  // leading bit is the integer part; b_i sits at bit k - i
  for (std::size_t i = 1; i <= k; ++i)
    bits_.push_back(static_cast<int>(mpz_tstbit(scaled_.get_mpz_t(), k - i)));
}

DyadicBits sqrt2_fraction_bits(std::size_t k, std::size_t max_bits) {
  if (k == 0) throw DomainError("sqrt2_fraction_bits: k must be positive");
  if (k > max_bits)
    throw ResourceLimitError("requested " + std::to_string(k) + " bits of sqrt(2); limit is " +
                             std::to_string(max_bits));
  return DyadicBits(isqrt(pow2(2 * k + 1)));
}

Sqrt2Stream::Sqrt2Stream(std::size_t initial_precision, std::size_t max_bits)
    : bits_(sqrt2_fraction_bits(std::max<std::size_t>(initial_precision, 1), max_bits)),
      max_bits_(max_bits) {}

int Sqrt2Stream::next() {
  if (pos_ == bits_.precision())
    bits_ = sqrt2_fraction_bits(std::min(2 * bits_.precision(), std::max(max_bits_, pos_ + 1)),
                                max_bits_);
  return bits_[++pos_];
}

}  // namespace lpat
