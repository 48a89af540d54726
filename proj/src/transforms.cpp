#include "lpat/transforms.hpp"

#include "lpat/errors.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <tuple>

namespace lpat {

namespace {

constexpr auto npos = std::string::npos;

bool contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

// Start of the maximal run of zeros that ends at index `last` (0-based).
std::size_t zero_run_start(const std::string& s, std::size_t last) {
  std::size_t st = last;
  while (st > 0 && s[st - 1] == '0') --st;
  return st;
}

bool ends_without_zero(std::string_view v) { return v.empty() || v.back() != '0'; }

// Each rewrite returns the new symbol string, or nullopt when the map
// acts as the identity. Indices below are 0-based.

std::optional<std::string> phi1(const std::string& s) {
  const auto last0 = s.rfind('0');
  if (last0 == npos || last0 + 1 == s.size()) return std::nullopt;
  const std::size_t p = s.size() - 1 - last0;
  return std::string(p, '1') + s.substr(0, last0) + '0';
}

std::optional<std::string> phi2(const std::string& s) {
  const auto p = s.find('0');  // v must open with the first zero
  if (p == npos) return std::nullopt;
  const auto j = s.find("0111", p);
  if (j == npos) return std::nullopt;
  const std::string_view v = std::string_view(s).substr(p, j - p + 1);
  if (v.empty() || v.front() != '0' || v.back() != '0' || contains(v, "111")) return std::nullopt;
  return std::string(p + 1, '1') + std::string(v) + "11" + s.substr(j + 4);
}

std::optional<std::string> phi3(const std::string& s) {
  const auto j = s.find("0011");
  if (j == npos) return std::nullopt;
  const std::size_t st = zero_run_start(s, j);
  const std::size_t p = j + 2 - st;
  const std::string_view v = std::string_view(s).substr(0, st);
  if (p < 2 || !ends_without_zero(v) || contains(v, "0011")) return std::nullopt;
  return std::string(v) + "011" + std::string(p - 1, '0') + s.substr(j + 4);
}

std::optional<std::string> phi4(const std::string& s) {
  const auto j = s.find("01010");
  if (j == npos) return std::nullopt;
  if (contains(s.substr(0, j) + "010", "01010")) return std::nullopt;
  std::string out = s;
  out[j + 2] = '1';
  out[j + 3] = '0';
  return out;
}

std::optional<std::string> phi5(const std::string& s) {
  const auto j = s.find("0100");
  if (j == npos) return std::nullopt;
  const std::size_t st = zero_run_start(s, j);
  const std::size_t p = j + 1 - st;
  const std::string_view v = std::string_view(s).substr(0, st);
  // guard: no 0100 inside v 0^p
  if (!ends_without_zero(v) || contains(std::string_view(s).substr(0, j + 1), "0100"))
    return std::nullopt;
  return std::string(v) + '1' + std::string(p + 2, '0') + s.substr(j + 4);
}

std::optional<std::string> phi6(const std::string& s) {
  const auto j = s.find("0010110");
  if (j == npos) return std::nullopt;
  const std::size_t st = zero_run_start(s, j + 1);
  const std::size_t p = j + 2 - st;
  const std::string_view v = std::string_view(s).substr(0, st);
  if (p < 2 || !ends_without_zero(v) ||
      contains(std::string_view(s).substr(0, j + 2), "0010110"))
    return std::nullopt;
  return std::string(v) + "01011" + std::string(p, '0') + s.substr(j + 7);
}

std::optional<std::string> phi7(const std::string& s) {
  const auto j = s.find("0110110");
  if (j == npos) return std::nullopt;
  if (contains(std::string_view(s).substr(0, j + 4), "0110110")) return std::nullopt;
  std::string out = s;
  out[j] = '1';
  out[j + 1] = '0';
  return out;
}

std::optional<std::string> apply_map(int k, const std::string& s) {
  switch (k) {
    case 1: return phi1(s);
    case 2: return phi2(s);
    case 3: return phi3(s);
    case 4: return phi4(s);
    case 5: return phi5(s);
    case 6: return phi6(s);
    case 7: return phi7(s);
    default: throw DomainError("phi: map index must be in 1..7, got " + std::to_string(k));
  }
}

}  // namespace

TransformStep phi(int k, const BinaryWord& u) {
  auto image = apply_map(k, u.to_string());
  TransformStep step{k, u, u, false};
  if (image) {
    step.after = BinaryWord::from_string(*image);
    step.changed = step.after != u;
  }
  return step;
}

Reduction reduce_to_normal_form(const BinaryWord& u, bool record_trace) {
  Reduction result{u, {}};
  std::string s = u.to_string();
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int k = 1; k <= kTransformCount; ++k) {
      auto image = apply_map(k, s);
      if (!image || *image == s) continue;
      if (record_trace)
        result.trace.push_back(
            {k, BinaryWord::from_string(s), BinaryWord::from_string(*image), true});
      s = std::move(*image);
      progressed = true;
      break;
    }
  }
  result.normal = BinaryWord::from_string(s);
  return result;
}

bool is_fixed_point(const BinaryWord& u) {
  const std::string s = u.to_string();
  for (int k = 1; k <= kTransformCount; ++k) {
    auto image = apply_map(k, s);
    if (image && *image != s) return false;
  }
  return true;
}

std::vector<ExcludedOccurrence> excluded_subword_scan(const BinaryWord& u) {
  const std::string s = u.to_string();
  const std::size_t n = s.size();
  std::vector<ExcludedOccurrence> out;

  const auto every = [&](int type, std::string_view pattern, auto&& accept) {
    for (auto j = s.find(pattern); j != npos; j = s.find(pattern, j + 1))
      if (accept(j)) out.push_back({type, j + 1});
  };
  const auto always = [](std::size_t) { return true; };

  if (n > 0 && s.back() == '1')
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] == '0') out.push_back({1, i + 1});

  if (const auto last111 = s.rfind("111"); last111 != npos)
    for (std::size_t i = 0; i < last111; ++i)
      if (s[i] == '0') out.push_back({2, i + 1});

  every(3, "0011", always);
  every(4, "01010", always);
  every(5, "0100", always);
  every(6, "0010110", always);
  every(7, "0110110", always);
  every(8, "001011", always);
  every(9, "00101", always);
  every(10, "0010", [&](std::size_t j) { return j + 4 < n; });
  every(11, "001", [&](std::size_t j) { return std::string_view(s).substr(j + 3) != "0"; });

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.type, a.position) < std::tie(b.type, b.position);
  });
  return out;
}

BinaryWord NormalFormClass::build() const {
  static const BinaryWord block = word("01011");
  BinaryWord u(p, 1);
  if (type_tag == 3 || type_tag == 5 || type_tag == 7) u.append(word("011"));
  if (type_tag != 1) u.append(block.repeat(s.value_or(0)));
  switch (type_tag) {
    case 1:
    case 4:
    case 5: u.append(q.value_or(0), 0); break;
    case 2:
    case 3:
      u.append(q.value_or(0), 0);
      u.append(word("10"));
      break;
    case 6:
    case 7: u.append(word("010")); break;
    default: throw DomainError("normal form type must be in 1..7");
  }
  return u;
}

std::size_t NormalFormClass::closed_form_length() const {
  const std::size_t qq = q.value_or(0), ss = s.value_or(0);
  switch (type_tag) {
    case 1: return p + qq;
    case 2: return 5 * ss + p + qq + 2;
    case 3: return 5 * ss + p + qq + 5;
    case 4: return 5 * ss + p + qq;
    case 5: return 5 * ss + p + qq + 3;
    case 6: return 5 * ss + p + 3;
    case 7: return 5 * ss + p + 6;
  }
  throw DomainError("normal form type must be in 1..7");
}

std::size_t NormalFormClass::closed_form_zeros() const {
  const std::size_t qq = q.value_or(0), ss = s.value_or(0);
  switch (type_tag) {
    case 1: return qq;
    case 2: return 2 * ss + qq + 1;
    case 3: return 2 * ss + qq + 2;
    case 4: return 2 * ss + qq;
    case 5: return 2 * ss + qq + 1;
    case 6: return 2 * ss + 2;
    case 7: return 2 * ss + 3;
  }
  throw DomainError("normal form type must be in 1..7");
}

std::size_t NormalFormClass::closed_form_patterns() const {
  if (type_tag == 6 || type_tag == 7) return 0;
  // q - 1 for every row with zeros; the all-ones word (type 1, q = 0) has none
  const std::size_t qq = q.value_or(0);
  return qq == 0 ? 0 : qq - 1;
}

std::optional<NormalFormClass> match_normal_form(const BinaryWord& u) {
  const std::string s = u.to_string();
  std::string_view rest(s);
  NormalFormClass c;
  while (c.p < rest.size() && rest[c.p] == '1') ++c.p;
  rest.remove_prefix(c.p);

  if (rest.find('1') == std::string_view::npos) {
    c.type_tag = 1;
    c.q = rest.size();
    return c;
  }

  const bool odd = rest.starts_with("011");
  if (odd) rest.remove_prefix(3);
  std::size_t blocks = 0;
  while (rest.starts_with("01011")) {
    rest.remove_prefix(5);
    ++blocks;
  }
  c.s = blocks;

  if (rest == "010") {
    c.type_tag = odd ? 7 : 6;
    return c;
  }
  const std::size_t zeros = std::min(rest.find_first_not_of('0'), rest.size());
  const std::string_view tail = rest.substr(zeros);
  if (tail.empty() && zeros >= 1 && (odd || blocks >= 1)) {
    c.type_tag = odd ? 5 : 4;
    c.q = zeros;
    return c;
  }
  if (tail == "10" && zeros >= 2) {
    c.type_tag = odd ? 3 : 2;
    c.q = zeros;
    return c;
  }
  return std::nullopt;
}

NormalFormClass classify_normal_form(const BinaryWord& u) {
  if (!is_fixed_point(u))
    throw PreconditionError("classify_normal_form: " + u.to_string() + " is not a fixed point");
  auto c = match_normal_form(u);
  if (!c) throw ClassificationError("fixed point " + u.to_string() + " matches no normal form");
  return *c;
}

}  // namespace lpat
