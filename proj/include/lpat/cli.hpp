#pragma once

#include "lpat/bigint.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lpat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitResourceLimit = 3;

struct Violation {
  std::string input;  // smallest offending word (enumeration is by length, then lexicographic)
  std::string detail;
};

struct VerifySuiteResult {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first few, in enumeration order
  std::chrono::duration<double> wall_time{};

  bool ok() const noexcept { return violation_count == 0; }
};

/// Exhaustive check over every word of length <= max_len.
/// Suites: "phi", "table1", "table2", "reduce". DomainError for others.
VerifySuiteResult run_verify_suite(std::string_view suite, std::size_t max_len);

enum class RateSource { sqrt2_patterns, undesirable_exact, construction };

RateSource parse_rate_source(std::string_view name);

/// Word selection for RateSource::construction.
struct ConstructionSpec {
  std::string bound = "lower";  // "lower" or "upper"
  std::string rate = "1/2";
};

struct RateRow {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  Rational rate;  // count / n
};

/// Rows at n = stride, 2 stride, ... <= max_n.
///   sqrt2-patterns:    count = |P(b^(n))|
///   undesirable-exact: count = d_n
///   construction:      count = |P(w^(n))| for the selected word
std::vector<RateRow> emit_rate_series(std::uint64_t max_n, std::uint64_t stride, RateSource source,
                                      const ConstructionSpec& construction = {});

/// Entry point for the `lpat` tool. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpat::cli
