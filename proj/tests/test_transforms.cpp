#include "lpat/errors.hpp"
#include "lpat/transforms.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

using namespace lpat;

namespace {

std::string ones(std::size_t n) { return std::string(n, '1'); }
std::string zeros(std::size_t n) { return std::string(n, '0'); }
bool contains(const std::string& s, const std::string& pat) { return s.find(pat) != std::string::npos; }
bool last_is_zero(const std::string& v) { return !v.empty() && v.back() == '0'; }

// Every decomposition allowed by the two-case definitions, tried literally.
// Returns all distinct images produced by the first case.
std::set<std::string> phi_images(int k, const std::string& u) {
  std::set<std::string> out;
  const std::size_t n = u.size();
  switch (k) {
    case 1:
      for (std::size_t p = 1; p + 1 <= n; ++p) {
        const std::string v = u.substr(0, n - p - 1);
        if (u == v + "0" + ones(p)) out.insert(ones(p) + v + "0");
      }
      break;
    case 2:
      for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t lv = 1; p + lv + 3 <= n; ++lv) {
          const std::string v = u.substr(p, lv), rest = u.substr(p + lv + 3);
          if (u != ones(p) + v + "111" + rest) continue;
          if (contains(v, "111") || v.front() != '0' || v.back() != '0') continue;
          out.insert(ones(p + 1) + v + "11" + rest);
        }
      break;
    case 3:
      for (std::size_t lv = 0; lv <= n; ++lv)
        for (std::size_t p = 2; lv + p + 2 <= n; ++p) {
          const std::string v = u.substr(0, lv), rest = u.substr(lv + p + 2);
          if (u != v + zeros(p) + "11" + rest) continue;
          if (contains(v, "0011") || last_is_zero(v)) continue;
          out.insert(v + "011" + zeros(p - 1) + rest);
        }
      break;
    case 4:
      for (std::size_t lv = 0; lv + 5 <= n; ++lv) {
        const std::string v = u.substr(0, lv), rest = u.substr(lv + 5);
        if (u != v + "01010" + rest || contains(v + "010", "01010")) continue;
        out.insert(v + "01100" + rest);
      }
      break;
    case 5:
      for (std::size_t lv = 0; lv <= n; ++lv)
        for (std::size_t p = 1; lv + p + 3 <= n; ++p) {
          const std::string v = u.substr(0, lv), rest = u.substr(lv + p + 3);
          if (u != v + zeros(p) + "100" + rest) continue;
          if (contains(v + zeros(p), "0100") || last_is_zero(v)) continue;
          out.insert(v + "1" + zeros(p + 2) + rest);
        }
      break;
    case 6:
      for (std::size_t lv = 0; lv <= n; ++lv)
        for (std::size_t p = 2; lv + p + 5 <= n; ++p) {
          const std::string v = u.substr(0, lv), rest = u.substr(lv + p + 5);
          if (u != v + zeros(p) + "10110" + rest) continue;
          if (contains(v + zeros(p), "0010110") || last_is_zero(v)) continue;
          out.insert(v + "01011" + zeros(p) + rest);
        }
      break;
    case 7:
      for (std::size_t lv = 0; lv + 7 <= n; ++lv) {
        const std::string v = u.substr(0, lv), rest = u.substr(lv + 7);
        if (u != v + "0110110" + rest || contains(v + "0110", "0110110")) continue;
        out.insert(v + "1010110" + rest);
      }
      break;
  }
  return out;
}

std::string from_mask(std::uint64_t mask, std::size_t n) {
  std::string s;
  for (std::size_t i = n; i-- > 0;) s.push_back(static_cast<char>('0' + ((mask >> i) & 1)));
  return s;
}

// Excluded-subword occurrences read straight off the table.
std::vector<ExcludedOccurrence> scan_oracle(const std::string& s) {
  std::vector<ExcludedOccurrence> out;
  const std::size_t n = s.size();
  const auto fixed = [&](int type, const std::string& pat) {
    for (std::size_t i = 0; i + pat.size() <= n; ++i)
      if (s.compare(i, pat.size(), pat) == 0) out.push_back({type, i + 1});
  };
  if (!s.empty() && s.back() == '1')
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] == '0') out.push_back({1, i + 1});
  const auto last111 = s.rfind("111");
  if (last111 != std::string::npos)
    for (std::size_t i = 0; i < last111; ++i)
      if (s[i] == '0') out.push_back({2, i + 1});
  fixed(3, "0011");
  fixed(4, "01010");
  fixed(5, "0100");
  fixed(6, "0010110");
  fixed(7, "0110110");
  fixed(8, "001011");
  fixed(9, "00101");
  for (std::size_t i = 0; i + 5 <= n; ++i)
    if (s.compare(i, 4, "0010") == 0) out.push_back({10, i + 1});
  for (std::size_t i = 0; i + 3 <= n; ++i)
    if (s.compare(i, 3, "001") == 0 && s.substr(i + 3) != "0") out.push_back({11, i + 1});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.type, a.position) < std::pair(b.type, b.position);
  });
  return out;
}

}  // namespace

TEST_CASE("golden transformation examples") {
  const auto apply = [](int k, const std::string& s) { return phi(k, word(s)).after.to_string(); };
  CHECK(apply(1, "1010011") == "1110100");
  CHECK(apply(2, ones(6) + "0110" + ones(4) + "0" + ones(5) + "0") ==
        ones(7) + "0110" + ones(3) + "0" + ones(5) + "0");
  CHECK(apply(3, "11011" "000011" "100110") == "11011" "011000" "100110");
  CHECK(apply(4, "110101010") == "110110010");
  CHECK(apply(5, "10011" "000100" "100") == "10011" "100000" "100");
  CHECK(apply(6, "1" "000010110" "0101100") == "1" "010110000" "0101100");
  CHECK(apply(7, "1110" "0110110" "110") == "1110" "1010110" "110");
}

TEST_CASE("golden fixed words") {
  const std::pair<int, std::string> fixed[] = {
      {1, "10100"},   {2, "1110011010"},   {3, "1011011"},   {4, "011010110101"},
      {5, "100110010"}, {6, "1010110"}, {7, "0111011010"}};
  for (const auto& [k, s] : fixed) {
    const auto step = phi(k, word(s));
    CHECK_FALSE(step.changed);
    CHECK(step.after.to_string() == s);
    CHECK(step.k == k);
  }
  CHECK_THROWS_AS(phi(0, word("0")), DomainError);
  CHECK_THROWS_AS(phi(8, word("0")), DomainError);
}

TEST_CASE("maps agree with the literal definitions for every word up to length 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const std::string s = from_mask(mask, n);
      for (int k = 1; k <= kTransformCount; ++k) {
        const auto images = phi_images(k, s);
        REQUIRE(images.size() <= 1);  // decomposition is unique
        const std::string expected = images.empty() ? s : *images.begin();
        const auto step = phi(k, word(s));
        INFO("k=" << k << " u=" << s);
        REQUIRE(step.after.to_string() == expected);
        REQUIRE(step.changed == (expected != s));
      }
    }
  }
}

TEST_CASE("fixed points") {
  CHECK(is_fixed_point(word("1010110")));
  CHECK_FALSE(is_fixed_point(word("1010011")));
  CHECK(is_fixed_point(word("")));
}

TEST_CASE("reduction") {
  CHECK(reduce_to_normal_form(BinaryWord(9, 0)).normal == BinaryWord(9, 0));
  CHECK(reduce_to_normal_form(BinaryWord(9, 0)).trace.empty());

  const auto r = reduce_to_normal_form(word("1010011"));
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace.front().k == 1);
  CHECK(r.trace.front().after.to_string() == "1110100");
  CHECK(is_fixed_point(r.normal));
  CHECK(r.normal.count_zeros() == 3);
  for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i].before == r.trace[i - 1].after);
  CHECK(r.trace.back().after == r.normal);
  CHECK(reduce_to_normal_form(word("1010011"), false).trace.empty());
}

TEST_CASE("excluded subword scan") {
  const auto has_type = [](const std::string& s, int type) {
    for (const auto& o : excluded_subword_scan(word(s)))
      if (o.type == type) return true;
    return false;
  };
  CHECK(has_type("010111", 2));
  CHECK(has_type("0011", 3));
  CHECK(excluded_subword_scan(word("1110000")).empty());
  CHECK(excluded_subword_scan(word("")).empty());

  for (std::size_t n = 0; n <= 12; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const std::string s = from_mask(mask, n);
      REQUIRE(excluded_subword_scan(word(s)) == scan_oracle(s));
    }
}

TEST_CASE("classification examples") {
  const auto c2 = classify_normal_form(word("11" "01011" "000" "10"));
  CHECK(c2 == NormalFormClass{2, 2, 3, 1});
  CHECK(c2.closed_form_length() == 12);
  CHECK(c2.closed_form_zeros() == 6);
  CHECK(c2.closed_form_patterns() == 2);

  const auto c1 = classify_normal_form(word("1110000"));
  CHECK(c1 == NormalFormClass{1, 3, 4, std::nullopt});
  CHECK(c1.closed_form_patterns() == 3);

  const auto c6 = classify_normal_form(word("1" "0101101011" "010"));
  CHECK(c6 == NormalFormClass{6, 1, std::nullopt, 2});
  CHECK(c6.closed_form_patterns() == 0);

  const auto empty = classify_normal_form(word(""));
  CHECK(empty.type_tag == 1);
  CHECK(empty.closed_form_patterns() == 0);

  CHECK_THROWS_AS(classify_normal_form(word("1010011")), PreconditionError);
}

TEST_CASE("every fixed point up to length 14 has exactly one table row") {
  // enumerate all parameterizations and count how often each word appears
  const std::size_t max_n = 14;
  std::map<std::string, std::vector<NormalFormClass>> rows;
  const auto blocks = [](std::size_t s) {
    std::string out;
    for (std::size_t i = 0; i < s; ++i) out += "01011";
    return out;
  };
  for (std::size_t p = 0; p <= max_n; ++p)
    for (std::size_t s = 0; 5 * s <= max_n; ++s)
      for (std::size_t q = 0; q <= max_n; ++q) {
        const std::pair<NormalFormClass, std::string> cands[] = {
            {{1, p, q, std::nullopt}, s == 0 ? ones(p) + zeros(q) : ""},
            {{2, p, q, s}, q >= 2 ? ones(p) + blocks(s) + zeros(q) + "10" : ""},
            {{3, p, q, s}, q >= 2 ? ones(p) + "011" + blocks(s) + zeros(q) + "10" : ""},
            {{4, p, q, s}, q >= 1 && s >= 1 ? ones(p) + blocks(s) + zeros(q) : ""},
            {{5, p, q, s}, q >= 1 ? ones(p) + "011" + blocks(s) + zeros(q) : ""},
            {{6, p, std::nullopt, s}, q == 0 ? ones(p) + blocks(s) + "010" : ""},
            {{7, p, std::nullopt, s}, q == 0 ? ones(p) + "011" + blocks(s) + "010" : ""},
        };
        for (const auto& [c, w] : cands) {
          if (c.type_tag == 1 ? (s != 0) : w.empty()) continue;
          if (w.size() <= max_n) rows[w].push_back(c);
        }
      }

  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const std::string s = from_mask(mask, n);
      const auto u = word(s);
      if (!is_fixed_point(u)) continue;
      INFO("u=" << s);
      const auto it = rows.find(s);
      REQUIRE(it != rows.end());
      REQUIRE(it->second.size() == 1);
      const auto c = classify_normal_form(u);
      REQUIRE(c == it->second.front());
      REQUIRE(c.build() == u);
      REQUIRE(c.closed_form_zeros() == u.count_zeros());
      REQUIRE(c.closed_form_patterns() == count_pattern_indices(u));
    }
}
