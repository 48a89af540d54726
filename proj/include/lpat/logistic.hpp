#pragma once

#include "lpat/bigint.hpp"
#include "lpat/sqrt2.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lpat {

/// Accuracy parameter n >= 2 of the integer logistic map on X_n = {1, ..., 2^n - 1}.
class AccuracyParam {
 public:
  explicit AccuracyParam(std::uint64_t n);
  std::uint64_t value() const noexcept { return n_; }
  /// 2^(n-1), the state that collapses the generator.
  BigInt midpoint() const { return pow2(n_ - 1); }
  friend auto operator<=>(const AccuracyParam&, const AccuracyParam&) = default;

 private:
  std::uint64_t n_;
};

/// Default width cap for the brute-force scan (2^n map evaluations).
inline constexpr std::uint64_t kDefaultBruteCap = 26;
/// Default number of bits compared before the tail test gives up.
inline constexpr std::size_t kDefaultLemma2Precision = 4096;

/// L_n(x) = floor(x (2^n - x) / 2^(n-2)). DomainError unless 1 <= x <= 2^n - 1.
BigInt logistic_map(AccuracyParam n, const BigInt& x);

/// Fixed-width L_n for n <= 32, where x (2^n - x) < 2^64.
std::uint64_t logistic_map_u64(unsigned n, std::uint64_t x) noexcept;

/// s_0, s_1, ..., s_K of the generator started at s_0.
struct StateTrace {
  AccuracyParam n;
  std::vector<BigInt> states;
  std::optional<std::size_t> collapsed_at;  // least i with s_i = 2^(n-1)
};

/// Iterates s_{i+1} = L_n(s_i) for `steps` steps. After the collapse
/// 2^(n-1) -> 2^n -> 0 the trace is padded with zeroes.
StateTrace iterate_states(AccuracyParam n, const BigInt& s0, std::size_t steps);

struct UndesirableVerdict {
  bool undesirable = false;
  std::optional<BigInt> witness;  // some x in X_n with L_n(x) = 2^(n-1)
};

/// Scans X_n for the least x with L_n(x) = 2^(n-1).
/// ResourceLimitError when n exceeds `cap`.
UndesirableVerdict is_undesirable_brute(AccuracyParam n, std::uint64_t cap = kDefaultBruteCap);

/// Exact O(1) test: with m = isqrt(2^(2n-3)), n is undesirable iff
/// m^2 > 2^(2n-3) - 2^(n-2). Witness is 2^(n-1) - m.
UndesirableVerdict is_undesirable_exact(AccuracyParam n);

/// Outcome of comparing (0.b_{n-1} b_n ...)_2 against (0.01 b_1 b_2 ...)_2.
enum class TailComparison {
  implied,      // tail is smaller: n is undesirable
  not_implied,  // tail is larger: the sufficient condition does not fire
  unknown,      // streams agreed on every compared bit
};

std::string_view to_string(TailComparison c) noexcept;

/// Tail comparison using freshly computed bits of sqrt(2).
TailComparison sufficient_by_lemma2(AccuracyParam n,
                                    std::size_t max_precision = kDefaultLemma2Precision);
/// Same, reading from precomputed bits. PreconditionError if `bits` is too
/// short to decide within `max_precision` positions.
TailComparison sufficient_by_lemma2(AccuracyParam n, const DyadicBits& bits,
                                    std::size_t max_precision = kDefaultLemma2Precision);

/// True iff b_{n-1} b_n = 00, b_{n-1}..b_{n+2} = 0100 or b_{n-1}..b_{n+3} = 01010,
/// i.e. n is in P(b).
bool sufficient_by_patterns(AccuracyParam n);
bool sufficient_by_patterns(AccuracyParam n, const DyadicBits& bits);

/// Bits of sqrt(2) needed to run both sufficient tests for every n <= max_n.
std::size_t sqrt2_bits_needed(std::uint64_t max_n, std::size_t max_precision = kDefaultLemma2Precision);

enum class Method { exact, brute, lemma2, patterns };

std::string_view to_string(Method m) noexcept;
/// Parses "exact", "brute", "lemma2", "patterns". DomainError otherwise.
Method parse_method(std::string_view name);

/// Per-parameter verdicts; fields stay empty for methods that were not run.
struct UndesirabilityReport {
  AccuracyParam n;
  std::optional<bool> exact;
  std::optional<bool> brute;
  std::optional<TailComparison> lemma2;
  std::optional<bool> patterns;
  std::optional<BigInt> witness_x;
};

struct AuditOptions {
  std::vector<Method> methods{Method::exact};
  std::uint64_t brute_cap = kDefaultBruteCap;
  std::size_t lemma2_precision = kDefaultLemma2Precision;
};

/// Runs the selected methods for every 2 <= n <= max_n, in order of n.
/// `bits` must cover sqrt2_bits_needed(max_n, ...) when lemma2 or patterns run;
/// pass nullptr to have them computed.
std::vector<UndesirabilityReport> audit_range(std::uint64_t max_n, const AuditOptions& options,
                                              const DyadicBits* bits = nullptr);

/// True iff the report's verdicts are mutually consistent:
/// patterns => lemma2 implied => exact, and brute == exact when both ran.
bool report_is_consistent(const UndesirabilityReport& report);

struct UndesirableCount {
  std::uint64_t count = 0;  // d_N
  Rational rate;            // d_N / N
};

/// d_N = #{2 <= n <= N : method reports true}. For lemma2 only `implied` counts.
UndesirableCount count_undesirable(std::uint64_t max_n, Method method,
                                   std::uint64_t brute_cap = kDefaultBruteCap);

}  // namespace lpat
