#include "lpat/errors.hpp"
#include "lpat/sqrt2.hpp"
#include "lpat/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

using namespace lpat;

namespace {

// P(w) straight from the three shapes on a std::string (0-based text).
std::vector<std::size_t> pattern_oracle(const std::string& s) {
  std::vector<std::size_t> out;
  const auto at = [&](std::size_t pos, const char* pat) {
    return s.compare(pos, std::string(pat).size(), pat) == 0 &&
           pos + std::string(pat).size() <= s.size();
  };
  for (std::size_t i = 2; i <= s.size(); ++i) {
    const std::size_t start = i - 2;  // w_{i-1}
    if (at(start, "00") || at(start, "0100") || at(start, "01010")) out.push_back(i);
  }
  return out;
}

std::string random_word(std::mt19937_64& rng, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + (rng() & 1)));
  return s;
}

}  // namespace

TEST_CASE("parsing and indexing") {
  const auto w = word("0110");
  CHECK(w.size() == 4);
  CHECK(w[1] == 0);
  CHECK(w[2] == 1);
  CHECK(w.at(4) == 0);
  CHECK_THROWS_AS(w.at(0), DomainError);
  CHECK_THROWS_AS(w.at(5), DomainError);
  CHECK_THROWS_AS(word("01a"), DomainError);
  CHECK(w.to_string() == "0110");
  CHECK(word("").empty());
}

TEST_CASE("packed storage across block boundaries") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {63u, 64u, 65u, 127u, 128u, 200u}) {
    const std::string s = random_word(rng, n);
    const auto w = word(s);
    CHECK(w.to_string() == s);
    CHECK(w.count_zeros() == static_cast<std::size_t>(std::count(s.begin(), s.end(), '0')));
    for (std::size_t k = 0; k <= n; k += 7) CHECK(w.prefix(k).to_string() == s.substr(0, k));
    CHECK(w.subword(3, n - 2).to_string() == s.substr(2, n - 4));
    auto copy = word(s.substr(0, 5));
    copy.append(w);
    CHECK(copy.to_string() == s.substr(0, 5) + s);
  }
}

TEST_CASE("lexicographic order matches std::string") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const std::string a = random_word(rng, rng() % 140), b = random_word(rng, rng() % 140);
    CHECK(((word(a) <=> word(b)) == (a <=> b)));
  }
  CHECK(word("1010") == word("1010"));
  CHECK(word("0111") < word("1000"));
}

TEST_CASE("zero indices") {
  CHECK(zero_indices(word("011")) == std::vector<std::size_t>{1});
  CHECK(zero_indices(word("1111")).empty());
  CHECK(zero_indices(word("011010100000100")).size() == 10);
}

TEST_CASE("pattern indices examples") {
  CHECK(pattern_indices(word("00")) == std::vector<std::size_t>{2});
  CHECK(pattern_indices(word("011010100000100")) ==
        std::vector<std::size_t>{5, 7, 9, 10, 11, 12, 13, 15});
  CHECK(pattern_indices(word("01011")).empty());
  // a shape cut off by the end of the word does not count
  CHECK(pattern_indices(word("010")).empty());
  CHECK(pattern_indices(word("0101")).empty());
  CHECK(pattern_indices(word("01010")) == std::vector<std::size_t>{2});
}

TEST_CASE("pattern indices match the string oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 3000; ++t) {
    const std::string s = random_word(rng, rng() % 90);
    const auto w = word(s);
    const auto expected = pattern_oracle(s);
    REQUIRE(pattern_indices(w) == expected);
    REQUIRE(count_pattern_indices(w) == expected.size());
    const auto counts = prefix_pattern_counts(w);
    for (std::size_t n = 0; n <= s.size(); ++n)
      REQUIRE(counts[n] == pattern_oracle(s.substr(0, n)).size());
  }
}

TEST_CASE("pattern indices are zero positions shifted by one") {
  // i in P implies w_{i-1} = 0, so |P| <= |Z|
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    const auto w = word(random_word(rng, rng() % 60));
    const auto z = zero_indices(w);
    const std::set<std::size_t> zs(z.begin(), z.end());
    for (auto i : pattern_indices(w)) CHECK(zs.count(i - 1) == 1);
  }
}

TEST_CASE("prefix rates") {
  const auto r0 = prefix_rates(BinaryWord(10, 0), 10);
  CHECK(r0.z_rate == 1);
  CHECK(r0.p_rate == Rational(9, 10));

  PeriodicWord periodic(word("01011"));
  const auto rp = prefix_rates(periodic, 100);
  CHECK(rp.z_rate == Rational(2, 5));
  CHECK(rp.p_rate == 0);

  const auto rb = prefix_rates(sqrt2_fraction_bits(15).word(), 15);
  CHECK(rb.z_rate == Rational(2, 3));  // 10/15
  CHECK(rb.p_rate == Rational(8, 15));

  const auto empty = prefix_rates(word("0101"), 0);
  CHECK(empty.z_rate == 0);
  CHECK_THROWS_AS(prefix_rates(word("01"), 3), DomainError);
}

TEST_CASE("finite pattern bound over all short words") {
  // 3|P(u)| >= 5|Z(u)| - 2N - 4 for every word of length <= 14
  for (std::size_t n = 0; n <= 14; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      BinaryWord w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<int>((mask >> i) & 1));
      const auto p = static_cast<long>(count_pattern_indices(w));
      const auto z = static_cast<long>(w.count_zeros());
      REQUIRE(3 * p >= 5 * z - 2 * static_cast<long>(n) - 4);
    }
  }
}
