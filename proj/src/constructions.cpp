#include "lpat/constructions.hpp"

#include "lpat/errors.hpp"

namespace lpat {

RationalRate::RationalRate(const BigInt& num, const BigInt& den)
    : RationalRate(make_rational(num, den)) {}

RationalRate::RationalRate(const Rational& r) : r_(r) {
  r_.canonicalize();
  if (sgn(r_) < 0 || r_ > 1)
    throw DomainError("rate " + to_fraction_string(r_) + " is outside [0, 1]");
}

RationalRate RationalRate::parse(std::string_view text) {
  return RationalRate(parse_rational(text));
}

namespace {

const Rational kTwoFifths(2, 5);

// Bits alpha_1 .. alpha_count of a/b in [0, 1), by long division.
std::vector<int> expand_bits(const Rational& alpha, std::size_t count) {
  std::vector<int> bits;
  bits.reserve(count);
  BigInt rem = alpha.get_num();
  const BigInt& den = alpha.get_den();
  for (std::size_t i = 0; i < count; ++i) {
    rem *= 2;
    const int bit = rem >= den ? 1 : 0;
    if (bit) rem -= den;
    bits.push_back(bit);
  }
  return bits;
}

BigInt as_big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

int LowerBoundParams::alpha_bit(std::size_t i) const {
  if (i == 0) throw DomainError("alpha bits are indexed from 1");
  return expand_bits(alpha, i).back();
}

std::vector<int> LowerBoundParams::alpha_bits(std::size_t count) const {
  return expand_bits(alpha, count);
}

LowerBoundParams lower_bound_params(const RationalRate& r) {
  const Rational& v = r.value();
  if (v <= kTwoFifths || v >= 1)
    throw DomainError("lower-bound parameters need 2/5 < r < 1, got " + to_fraction_string(v));
  Rational x = (5 * v - 2) / (1 - v);
  x.canonicalize();
  BigInt p;
  mpz_cdiv_q(p.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (!p.fits_ulong_p()) throw ResourceLimitError("lower-bound block parameter p is too large");
  LowerBoundParams params;
  params.p = p.get_ui();
  params.alpha = Rational(p) - x;
  params.alpha.canonicalize();
  return params;
}

BinaryWord lower_bound_block(const LowerBoundParams& params, std::size_t i) {
  const auto bits = params.alpha_bits(i);
  BinaryWord w;
  for (std::size_t j = 1; j <= i; ++j) {
    BinaryWord next = w;
    next.append(w);
    next.append(word("01011"));
    next.append(params.p - static_cast<std::uint64_t>(bits[j - 1]), 0);
    w = std::move(next);
  }
  return w;
}

BinaryWord lower_bound_word(const RationalRate& r, std::size_t len) {
  const Rational& v = r.value();
  if (v < kTwoFifths)
    throw DomainError("lower-bound word needs r >= 2/5, got " + to_fraction_string(v));
  if (v == kTwoFifths) {
    PeriodicWord src(word("01011"));
    return take(src, len);
  }
  if (v == 1) return BinaryWord(len, 0);

  const auto params = lower_bound_params(r);
  // shallowest depth whose block already covers len symbols
  std::size_t depth = 1;
  while (lemma14_stats(depth, params).length < as_big(len)) ++depth;
  return lower_bound_block(params, depth).prefix(len);
}

BlockStats lemma14_stats(std::size_t i, const LowerBoundParams& params) {
  if (i == 0) throw DomainError("lemma14_stats: i must be >= 1");
  const auto bits = params.alpha_bits(i);
  BigInt weighted = 0;  // sum_{j<=i} 2^(i-j) alpha_j
  for (std::size_t j = 1; j <= i; ++j) weighted += BigInt(bits[j - 1]) * pow2(i - j);
  const BigInt span = pow2(i) - 1;
  const BigInt p(static_cast<unsigned long>(params.p));
  const int correction = params.p == 1 ? bits[i - 1] : 0;
  return {span * (p + 5) - weighted, span * (p + 2) - weighted,
          span * p - 1 - weighted + correction};
}

bool lemma14_identity_holds(std::size_t i, const LowerBoundParams& params,
                            const BlockStats& stats) {
  const int correction = params.p == 1 ? params.alpha_bit(i) : 0;
  return 5 * stats.zeros - 2 * stats.length == 3 * stats.patterns + 3 - 3 * correction;
}

std::vector<int> upper_bound_deltas(const RationalRate& r, std::size_t count) {
  const BigInt num = r.num(), den = r.den();
  std::vector<int> deltas;
  deltas.reserve(count);
  BigInt weight = 0;
  for (std::size_t k = 1; k <= count; ++k) {
    const BigInt kk = as_big(k);
    const bool fire = (weight + 2 * kk) * den <= num * kk * (kk + 1);
    if (fire) weight += 2 * kk;
    deltas.push_back(fire ? 1 : 0);
  }
  return deltas;
}

BinaryWord upper_bound_word(const RationalRate& r, std::size_t len) {
  UpperBoundStream src(r);
  return take(src, len);
}

Rational running_partial_sums(const RationalRate& r, std::size_t k) {
  if (k == 0) throw DomainError("running_partial_sums: k must be >= 1");
  const auto deltas = upper_bound_deltas(r, k);
  BigInt weight = 0;
  for (std::size_t i = 1; i <= k; ++i)
    if (deltas[i - 1]) weight += 2 * as_big(i);
  return make_rational(weight, as_big(k) * as_big(k + 1));
}

LowerBoundStream::LowerBoundStream(const RationalRate& r) : mode_(Mode::recursive) {
  const Rational& v = r.value();
  if (v < kTwoFifths)
    throw DomainError("lower-bound word needs r >= 2/5, got " + to_fraction_string(v));
  if (v == kTwoFifths || v == 1) {
    mode_ = Mode::periodic;
    period_ = v == 1 ? word("0") : word("01011");
  } else {
    params_ = lower_bound_params(r);
  }
}

int LowerBoundStream::next() {
  if (mode_ == Mode::periodic) {
    const int s = period_[pos_ % period_.size() + 1];
    ++pos_;
    return s;
  }
  if (pos_ == built_.size()) {
    // w<d> = w<d-1> w<d-1> 01011 0^(p - alpha_d); w<d-1> is already a prefix
    ++depth_;
    BinaryWord grown = built_;
    grown.append(built_);
    grown.append(word("01011"));
    grown.append(params_.p - static_cast<std::uint64_t>(params_.alpha_bit(depth_)), 0);
    built_ = std::move(grown);
  }
  return built_[++pos_];
}

UpperBoundStream::UpperBoundStream(const RationalRate& r) : r_(r.value()) {}

int UpperBoundStream::next() {
  if (left_ == 0) {
    ++k_;
    const BigInt k = as_big(k_);
    const bool fire = (zero_weight_ + 2 * k) * r_.get_den() <= r_.get_num() * k * (k + 1);
    if (fire) zero_weight_ += 2 * k;
    symbol_ = fire ? 0 : 1;
    left_ = 2 * k_;
  }
  --left_;
  return symbol_;
}

}  // namespace lpat
