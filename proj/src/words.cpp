#include "lpat/words.hpp"

#include "lpat/errors.hpp"

#include <bit>
#include <utility>

namespace lpat {

namespace {

constexpr std::size_t blocks_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

BinaryWord::BinaryWord(std::size_t n, int symbol) { append(n, symbol); }

BinaryWord BinaryWord::from_string(std::string_view text) {
  BinaryWord w;
  w.blocks_.reserve(blocks_for(text.size()));
  for (char c : text) {
    if (c != '0' && c != '1')
      throw DomainError(std::string("binary word contains non-binary character '") + c + "'");
    w.push_back(c - '0');
  }
  return w;
}

int BinaryWord::at(std::size_t i) const {
  if (i == 0 || i > size_)
    throw DomainError("word index " + std::to_string(i) + " out of range [1, " +
                      std::to_string(size_) + "]");
  return (*this)[i];
}

void BinaryWord::set(std::size_t i, int symbol) {
  if (i == 0 || i > size_) throw DomainError("word index out of range");
  const std::size_t k = i - 1;
  const std::uint64_t mask = std::uint64_t{1} << (k & 63);
  if (symbol)
    blocks_[k >> 6] |= mask;
  else
    blocks_[k >> 6] &= ~mask;
}

void BinaryWord::push_back(int symbol) {
  if ((size_ & 63) == 0) blocks_.push_back(0);
  if (symbol) blocks_[size_ >> 6] |= std::uint64_t{1} << (size_ & 63);
  ++size_;
}

void BinaryWord::append(const BinaryWord& tail) {
  if ((size_ & 63) == 0) {
    // aligned: copy whole blocks
    blocks_.insert(blocks_.end(), tail.blocks_.begin(), tail.blocks_.end());
    size_ += tail.size_;
    return;
  }
  blocks_.reserve(blocks_for(size_ + tail.size_));
  for (std::size_t i = 1; i <= tail.size_; ++i) push_back(tail[i]);
}

void BinaryWord::append(std::size_t count, int symbol) {
  blocks_.reserve(blocks_for(size_ + count));
  for (std::size_t i = 0; i < count; ++i) push_back(symbol);
}

BinaryWord BinaryWord::prefix(std::size_t k) const {
  if (k > size_) throw DomainError("prefix length exceeds word length");
  BinaryWord out;
  out.blocks_.assign(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(blocks_for(k)));
  out.size_ = k;
  if (k & 63) out.blocks_.back() &= (std::uint64_t{1} << (k & 63)) - 1;
  return out;
}

BinaryWord BinaryWord::subword(std::size_t i, std::size_t j) const {
  BinaryWord out;
  if (j < i) return out;
  if (i == 0 || j > size_) throw DomainError("subword bounds out of range");
  for (std::size_t k = i; k <= j; ++k) out.push_back((*this)[k]);
  return out;
}

BinaryWord BinaryWord::repeat(std::size_t j) const {
  BinaryWord out;
  for (std::size_t r = 0; r < j; ++r) out.append(*this);
  return out;
}

std::size_t BinaryWord::count_ones() const noexcept {
  std::size_t ones = 0;
  for (auto b : blocks_) ones += static_cast<std::size_t>(std::popcount(b));
  return ones;
}

std::size_t BinaryWord::count_zeros() const noexcept { return size_ - count_ones(); }

std::string BinaryWord::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 1; i <= size_; ++i)
    if ((*this)[i]) s[i - 1] = '1';
  return s;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept {
  const std::size_t common = std::min(a.size_, b.size_);
  const std::size_t full = common / 64;
  for (std::size_t k = 0; k <= full && k < a.blocks_.size() && k < b.blocks_.size(); ++k) {
    std::uint64_t diff = a.blocks_[k] ^ b.blocks_[k];
    if (k == full) {
      if ((common & 63) == 0) break;
      diff &= (std::uint64_t{1} << (common & 63)) - 1;
    }
    if (diff) {
      const auto bit = std::countr_zero(diff);
      return ((a.blocks_[k] >> bit) & 1u) ? std::strong_ordering::greater
                                          : std::strong_ordering::less;
    }
  }
  return a.size_ <=> b.size_;
}

BinaryWord word(std::string_view text) { return BinaryWord::from_string(text); }

std::vector<std::size_t> zero_indices(const BinaryWord& w) {
  std::vector<std::size_t> z;
  z.reserve(w.count_zeros());
  for (std::size_t i = 1; i <= w.size(); ++i)
    if (w[i] == 0) z.push_back(i);
  return z;
}

bool is_pattern_index(const BinaryWord& w, std::size_t i) {
  const std::size_t n = w.size();
  if (i < 2 || i > n || w[i - 1] != 0) return false;
  if (w[i] == 0) return true;  // 00
  if (i + 2 > n || w[i + 1] != 0) return false;
  if (w[i + 2] == 0) return true;  // 0100
  return i + 3 <= n && w[i + 3] == 0;  // 01010
}

std::vector<std::size_t> pattern_indices(const BinaryWord& w) {
  std::vector<std::size_t> p;
  for (std::size_t i = 2; i <= w.size(); ++i)
    if (is_pattern_index(w, i)) p.push_back(i);
  return p;
}

std::size_t count_pattern_indices(const BinaryWord& w) {
  std::size_t count = 0;
  for (std::size_t i = 2; i <= w.size(); ++i)
    if (is_pattern_index(w, i)) ++count;
  return count;
}

std::vector<std::size_t> prefix_pattern_counts(const BinaryWord& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> joins(n + 1, 0);  // joins[e]: indices that first count at length e
  for (std::size_t i = 2; i <= n; ++i) {
    if (w[i - 1] != 0) continue;
    if (w[i] == 0) {
      ++joins[i];
    } else if (i + 2 <= n && w[i + 1] == 0) {
      if (w[i + 2] == 0)
        ++joins[i + 2];
      else if (i + 3 <= n && w[i + 3] == 0)
        ++joins[i + 3];
    }
  }
  std::vector<std::size_t> counts(n + 1, 0);
  for (std::size_t e = 1; e <= n; ++e) counts[e] = counts[e - 1] + joins[e];
  return counts;
}

PeriodicWord::PeriodicWord(BinaryWord period) : period_(std::move(period)) {
  if (period_.empty()) throw DomainError("periodic word needs a nonempty period");
}

int PeriodicWord::next() {
  const int s = period_[pos_ + 1];
  pos_ = (pos_ + 1) % period_.size();
  return s;
}

BinaryWord take(WordSource& source, std::size_t n) {
  BinaryWord out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(source.next());
  return out;
}

RateEstimate prefix_rates(const BinaryWord& w, std::size_t n) {
  if (n > w.size())
    throw DomainError("prefix length " + std::to_string(n) + " exceeds word length " +
                      std::to_string(w.size()));
  const BinaryWord head = n == w.size() ? w : w.prefix(n);
  RateEstimate r;
  r.n = n;
  r.z_count = head.count_zeros();
  r.p_count = count_pattern_indices(head);
  if (n > 0) {
    r.z_rate = make_rational(static_cast<unsigned long>(r.z_count), static_cast<unsigned long>(n));
    r.p_rate = make_rational(static_cast<unsigned long>(r.p_count), static_cast<unsigned long>(n));
  }
  return r;
}

RateEstimate prefix_rates(WordSource& source, std::size_t n) {
  return prefix_rates(take(source, n), n);
}

}  // namespace lpat
