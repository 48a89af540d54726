#include "lpat/logistic.hpp"

#include "lpat/errors.hpp"
#include "lpat/parallel.hpp"

#include <algorithm>

namespace lpat {

AccuracyParam::AccuracyParam(std::uint64_t n) : n_(n) {
  if (n < 2) throw DomainError("accuracy parameter must be >= 2, got " + std::to_string(n));
}

namespace {

// floor(x (2^n - x) / 2^(n-2)) for any 0 <= x <= 2^n
BigInt raw_map(std::uint64_t n, const BigInt& x) {
  BigInt r = x * (pow2(n) - x);
  mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), n - 2);
  return r;
}

}  // namespace

BigInt logistic_map(AccuracyParam n, const BigInt& x) {
  if (x < 1 || x >= pow2(n.value()))
    throw DomainError("logistic_map: x = " + x.get_str() + " is outside X_" +
                      std::to_string(n.value()));
  return raw_map(n.value(), x);
}

std::uint64_t logistic_map_u64(unsigned n, std::uint64_t x) noexcept {
  return (x * ((std::uint64_t{1} << n) - x)) >> (n - 2);
}

StateTrace iterate_states(AccuracyParam n, const BigInt& s0, std::size_t steps) {
  if (s0 < 1 || s0 >= pow2(n.value()))
    throw DomainError("iterate_states: seed " + s0.get_str() + " is outside X_" +
                      std::to_string(n.value()));
  const BigInt mid = n.midpoint();
  StateTrace trace{n, {}, std::nullopt};
  trace.states.reserve(steps + 1);
  trace.states.push_back(s0);
  for (std::size_t i = 0; i < steps; ++i) {
    const BigInt& s = trace.states.back();
    if (!trace.collapsed_at && s == mid) trace.collapsed_at = i;
    if (s == 0) {
      trace.states.resize(steps + 1, BigInt(0));
      break;
    }
    trace.states.push_back(raw_map(n.value(), s));
  }
  if (!trace.collapsed_at && trace.states.back() == mid) trace.collapsed_at = steps;
  return trace;
}

UndesirableVerdict is_undesirable_brute(AccuracyParam n, std::uint64_t cap) {
  const std::uint64_t w = n.value();
  if (w > cap || w > 32)
    throw ResourceLimitError("brute-force scan of X_" + std::to_string(w) + " exceeds cap " +
                             std::to_string(std::min<std::uint64_t>(cap, 32)));
  const auto bits = static_cast<unsigned>(w);
  const std::uint64_t mid = std::uint64_t{1} << (bits - 1);
  // L_n(x) = L_n(2^n - x), so the least solution lies below the midpoint
  for (std::uint64_t x = 1; x < mid; ++x) {
    if (logistic_map_u64(bits, x) == mid)
      return {true, BigInt(static_cast<unsigned long>(x))};
  }
  return {};
}

UndesirableVerdict is_undesirable_exact(AccuracyParam n) {
  const std::uint64_t w = n.value();
  const BigInt upper = pow2(2 * w - 3);
  const BigInt m = isqrt(upper);
  if (m * m > upper - pow2(w - 2)) return {true, n.midpoint() - m};
  return {};
}

std::string_view to_string(TailComparison c) noexcept {
  switch (c) {
    case TailComparison::implied: return "true";
    case TailComparison::not_implied: return "false";
    case TailComparison::unknown: return "unknown";
  }
  return "unknown";
}

TailComparison sufficient_by_lemma2(AccuracyParam n, std::size_t max_precision) {
  return sufficient_by_lemma2(n, sqrt2_fraction_bits(sqrt2_bits_needed(n.value(), max_precision)),
                              max_precision);
}

TailComparison sufficient_by_lemma2(AccuracyParam n, const DyadicBits& bits,
                                    std::size_t max_precision) {
  const std::size_t shift = n.value() - 2;
  for (std::size_t j = 1; j <= max_precision; ++j) {
    // left stream: b_{n-2+j}; right stream: 0, 1, b_1, b_2, ...
    const std::size_t ia = shift + j;
    if (ia > bits.precision())
      throw PreconditionError("sqrt(2) prefix too short for the tail comparison at n = " +
                              std::to_string(n.value()));
    const int a = bits[ia];
    const int b = j == 1 ? 0 : j == 2 ? 1 : bits[j - 2];
    if (a < b) return TailComparison::implied;
    if (a > b) return TailComparison::not_implied;
  }
  return TailComparison::unknown;
}

bool sufficient_by_patterns(AccuracyParam n) {
  return sufficient_by_patterns(n, sqrt2_fraction_bits(n.value() + 3));
}

bool sufficient_by_patterns(AccuracyParam n, const DyadicBits& bits) {
  if (bits.precision() < n.value() + 3)
    throw PreconditionError("sqrt(2) prefix too short for the pattern test at n = " +
                            std::to_string(n.value()));
  return is_pattern_index(bits.word(), n.value());
}

std::size_t sqrt2_bits_needed(std::uint64_t max_n, std::size_t max_precision) {
  return std::max<std::size_t>(max_n + 3, max_n + max_precision);
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::exact: return "exact";
    case Method::brute: return "brute";
    case Method::lemma2: return "lemma2";
    case Method::patterns: return "patterns";
  }
  return "exact";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::exact;
  if (name == "brute") return Method::brute;
  if (name == "lemma2") return Method::lemma2;
  if (name == "patterns") return Method::patterns;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

std::vector<UndesirabilityReport> audit_range(std::uint64_t max_n, const AuditOptions& options,
                                              const DyadicBits* bits) {
  if (max_n < 2) return {};
  const auto uses = [&](Method m) {
    return std::find(options.methods.begin(), options.methods.end(), m) != options.methods.end();
  };
  if (uses(Method::brute) && max_n > std::min<std::uint64_t>(options.brute_cap, 32))
    throw ResourceLimitError("brute-force audit up to n = " + std::to_string(max_n) +
                             " exceeds cap " + std::to_string(options.brute_cap));

  std::optional<DyadicBits> owned;
  if ((uses(Method::lemma2) || uses(Method::patterns)) && bits == nullptr) {
    owned.emplace(sqrt2_fraction_bits(sqrt2_bits_needed(max_n, options.lemma2_precision)));
    bits = &*owned;
  }

  std::vector<std::optional<UndesirabilityReport>> slots(max_n - 1);
  parallel_for(slots.size(), [&](std::size_t idx) {
    const AccuracyParam n(idx + 2);
    UndesirabilityReport r{n, {}, {}, {}, {}, {}};
    if (uses(Method::exact)) {
      auto v = is_undesirable_exact(n);
      r.exact = v.undesirable;
      r.witness_x = std::move(v.witness);
    }
    if (uses(Method::brute)) {
      auto v = is_undesirable_brute(n, options.brute_cap);
      r.brute = v.undesirable;
      if (!r.witness_x) r.witness_x = std::move(v.witness);
    }
    if (uses(Method::lemma2)) r.lemma2 = sufficient_by_lemma2(n, *bits, options.lemma2_precision);
    if (uses(Method::patterns)) r.patterns = sufficient_by_patterns(n, *bits);
    slots[idx] = std::move(r);
  });

  std::vector<UndesirabilityReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

bool report_is_consistent(const UndesirabilityReport& r) {
  const bool lemma2_fires = r.lemma2 && *r.lemma2 == TailComparison::implied;
  if (r.patterns && *r.patterns && r.lemma2 && !lemma2_fires) return false;
  if (r.patterns && *r.patterns && r.exact && !*r.exact) return false;
  if (lemma2_fires && r.exact && !*r.exact) return false;
  if (r.brute && r.exact && *r.brute != *r.exact) return false;
  return true;
}

UndesirableCount count_undesirable(std::uint64_t max_n, Method method, std::uint64_t brute_cap) {
  if (max_n < 2) throw DomainError("count_undesirable: N must be >= 2");
  AuditOptions options;
  options.methods = {method};
  options.brute_cap = brute_cap;
  UndesirableCount result;
  for (const auto& r : audit_range(max_n, options)) {
    bool hit = false;
    switch (method) {
      case Method::exact: hit = *r.exact; break;
      case Method::brute: hit = *r.brute; break;
      case Method::lemma2: hit = *r.lemma2 == TailComparison::implied; break;
      case Method::patterns: hit = *r.patterns; break;
    }
    if (hit) ++result.count;
  }
  result.rate = make_rational(static_cast<unsigned long>(result.count),
                              static_cast<unsigned long>(max_n));
  return result;
}

}  // namespace lpat
