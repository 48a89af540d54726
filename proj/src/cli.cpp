#include "lpat/cli.hpp"

#include "lpat/constructions.hpp"
#include "lpat/errors.hpp"
#include "lpat/logistic.hpp"
#include "lpat/sqrt2.hpp"
#include "lpat/transforms.hpp"
#include "lpat/words.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

namespace lpat::cli {

namespace {

constexpr std::size_t kStoredViolations = 20;

// w_1 is the most significant of the N low bits, so increasing masks
// enumerate W_N in lexicographic order.
BinaryWord word_from_mask(std::uint64_t mask, std::size_t n) {
  BinaryWord w;
  for (std::size_t i = n; i-- > 0;) w.push_back(static_cast<int>((mask >> i) & 1u));
  return w;
}

template <class Check>
VerifySuiteResult sweep(std::string_view name, std::size_t max_len, Check&& check) {
  if (max_len > 24) throw ResourceLimitError("verify: --max-len above 24 is not supported");
  const auto start = std::chrono::steady_clock::now();
  VerifySuiteResult result;
  result.suite = std::string(name);
  for (std::size_t n = 0; n <= max_len; ++n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const BinaryWord u = word_from_mask(mask, n);
      const auto report = [&](std::string detail) {
        if (result.violation_count++ < kStoredViolations)
          result.violations.push_back({u.to_string(), std::move(detail)});
      };
      result.cases += check(u, report);
    }
  }
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

// Number of table parameterizations (type, p, q, s) that spell exactly u.
std::size_t count_parameterizations(const BinaryWord& u) {
  const std::size_t n = u.size();
  std::size_t hits = 0;
  for (int type = 1; type <= 7; ++type) {
    for (std::size_t p = 0; p <= n; ++p) {
      for (std::size_t s = 0; 5 * s <= n; ++s) {
        for (std::size_t q = 0; q <= n; ++q) {
          NormalFormClass c{type, p, std::nullopt, std::nullopt};
          if (type != 1) c.s = s;
          if (type != 6 && type != 7) c.q = q;
          // respect the parameter ranges of each row
          if (type == 1 && s != 0) continue;
          if ((type == 6 || type == 7) && q != 0) continue;
          if ((type == 2 || type == 3) && q < 2) continue;
          if ((type == 4 || type == 5) && q < 1) continue;
          if (type == 4 && s < 1) continue;
          if (c.closed_form_length() != n) continue;
          if (c.build() == u) ++hits;
        }
      }
    }
  }
  return hits;
}

}  // namespace

VerifySuiteResult run_verify_suite(std::string_view suite, std::size_t max_len) {
  if (suite == "phi") {
    return sweep(suite, max_len, [](const BinaryWord& u, auto&& report) -> std::uint64_t {
      const std::size_t p_before = count_pattern_indices(u);
      for (int k = 1; k <= kTransformCount; ++k) {
        const auto step = phi(k, u);
        const auto& v = step.after;
        const std::string tag = "phi_" + std::to_string(k) + " -> " + v.to_string() + ": ";
        if (v.size() != u.size()) report(tag + "length changed");
        if (v.count_zeros() != u.count_zeros()) report(tag + "zero count changed");
        if (v < u) report(tag + "image precedes the input");
        if (step.changed != (v != u)) report(tag + "changed flag is wrong");
        const std::size_t p_after = count_pattern_indices(v);
        if (k <= 2 && p_after != p_before) report(tag + "|P| not preserved");
        if (k >= 3 && p_after > p_before) report(tag + "|P| increased");
      }
      return kTransformCount;
    });
  }
  if (suite == "table1") {
    return sweep(suite, max_len, [](const BinaryWord& u, auto&& report) -> std::uint64_t {
      if (!is_fixed_point(u)) return 0;
      const auto hits = excluded_subword_scan(u);
      if (!hits.empty())
        report("contains excluded subword of type " + std::to_string(hits.front().type) +
               " at " + std::to_string(hits.front().position));
      return 1;
    });
  }
  if (suite == "table2") {
    return sweep(suite, max_len, [](const BinaryWord& u, auto&& report) -> std::uint64_t {
      if (!is_fixed_point(u)) return 0;
      const auto c = match_normal_form(u);
      if (!c) {
        report("matches no normal form");
        return 1;
      }
      if (c->build() != u) report("parameters do not rebuild the word");
      if (c->closed_form_length() != u.size()) report("closed form for N disagrees");
      if (c->closed_form_zeros() != u.count_zeros()) report("closed form for |Z| disagrees");
      if (c->closed_form_patterns() != count_pattern_indices(u))
        report("closed form for |P| disagrees");
      if (const auto k = count_parameterizations(u); k != 1)
        report("matches " + std::to_string(k) + " table rows");
      return 1;
    });
  }
  if (suite == "reduce") {
    return sweep(suite, max_len, [](const BinaryWord& u, auto&& report) -> std::uint64_t {
      const auto red = reduce_to_normal_form(u);
      const std::size_t n = u.size(), z = u.count_zeros(), p = count_pattern_indices(u);
      if (!is_fixed_point(red.normal)) report("reduction did not reach a fixed point");
      if (red.normal.count_zeros() != z) report("reduction changed |Z|");
      if (count_pattern_indices(red.normal) > p) report("reduction increased |P|");
      for (const auto& step : red.trace)
        if (!(step.before < step.after)) report("non-increasing step");
      if (3 * p + 2 * n + 4 < 5 * z) report("3|P| >= 5|Z| - 2N - 4 violated");
      return 1;
    });
  }
  throw DomainError("unknown verify suite '" + std::string(suite) + "'");
}

RateSource parse_rate_source(std::string_view name) {
  if (name == "sqrt2-patterns") return RateSource::sqrt2_patterns;
  if (name == "undesirable-exact") return RateSource::undesirable_exact;
  if (name == "construction") return RateSource::construction;
  throw DomainError("unknown rate source '" + std::string(name) + "'");
}

namespace {

BinaryWord construction_word(const ConstructionSpec& spec, std::size_t len) {
  const auto r = RationalRate::parse(spec.rate);
  if (spec.bound == "lower") return lower_bound_word(r, len);
  if (spec.bound == "upper") return upper_bound_word(r, len);
  throw DomainError("--bound must be 'lower' or 'upper'");
}

}  // namespace

std::vector<RateRow> emit_rate_series(std::uint64_t max_n, std::uint64_t stride, RateSource source,
                                      const ConstructionSpec& construction) {
  if (stride == 0) throw DomainError("stride must be >= 1");
  std::vector<std::uint64_t> cumulative;  // cumulative[n] for 0 <= n <= max_n
  switch (source) {
    case RateSource::sqrt2_patterns: {
      if (max_n == 0) break;
      const auto counts = prefix_pattern_counts(sqrt2_fraction_bits(max_n).word());
      cumulative.assign(counts.begin(), counts.end());
      break;
    }
    case RateSource::construction: {
      const auto counts = prefix_pattern_counts(construction_word(construction, max_n));
      cumulative.assign(counts.begin(), counts.end());
      break;
    }
    case RateSource::undesirable_exact: {
      cumulative.assign(max_n + 1, 0);
      const auto reports = audit_range(max_n, AuditOptions{});
      for (std::uint64_t n = 2; n <= max_n; ++n)
        cumulative[n] = cumulative[n - 1] + (*reports[n - 2].exact ? 1 : 0);
      break;
    }
  }
  std::vector<RateRow> rows;
  for (std::uint64_t n = stride; n <= max_n; n += stride) {
    rows.push_back({n, cumulative[n],
                    make_rational(static_cast<unsigned long>(cumulative[n]),
                                  static_cast<unsigned long>(n))});
  }
  return rows;
}

namespace {

class OutputTarget {
 public:
  OutputTarget(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string read_word_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.pop_back();
  return text;
}

std::string cell(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer logistic map parameter audits and binary word pattern tools", "lpat"};
  app.require_subcommand(1);

  // sqrt2
  std::size_t sqrt2_bits = 0, sqrt2_max = kDefaultMaxSqrt2Bits;
  std::string sqrt2_out;
  auto* sqrt2_cmd = app.add_subcommand("sqrt2", "Fractional binary digits of sqrt(2)");
  sqrt2_cmd->add_option("--bits", sqrt2_bits, "Number of bits")->required();
  sqrt2_cmd->add_option("--out", sqrt2_out, "Write to FILE instead of stdout");
  sqrt2_cmd->add_option("--max-bits", sqrt2_max, "Precision cap")->capture_default_str();

  // undesirable
  std::uint64_t und_max = 0, und_cap = kDefaultBruteCap;
  std::size_t und_precision = kDefaultLemma2Precision;
  std::vector<std::string> und_methods{"exact"};
  std::string und_csv;
  bool und_cumulative = false;
  auto* und_cmd = app.add_subcommand("undesirable", "Audit accuracy parameters 2..N");
  und_cmd->add_option("--max", und_max, "Largest n")->required();
  und_cmd->add_option("--method", und_methods, "exact|brute|patterns|lemma2 (comma list)")
      ->delimiter(',')
      ->capture_default_str();
  und_cmd->add_option("--csv", und_csv, "Write CSV to FILE");
  und_cmd->add_option("--brute-cap", und_cap, "Largest n for brute force")->capture_default_str();
  und_cmd->add_option("--lemma2-precision", und_precision, "Bits compared by lemma2")
      ->capture_default_str();
  und_cmd->add_flag("--cumulative", und_cumulative,
                    "Append d_n,rate,rate_decimal columns for the first method");

  // word-stats
  std::string ws_word, ws_file;
  std::optional<std::size_t> ws_prefix;
  auto* ws_cmd = app.add_subcommand("word-stats", "Zero and pattern counts of a word prefix");
  auto* ws_word_opt = ws_cmd->add_option("--word", ws_word, "ASCII 0/1 word");
  auto* ws_file_opt = ws_cmd->add_option("--file", ws_file, "File holding an ASCII 0/1 word");
  ws_word_opt->excludes(ws_file_opt);
  ws_cmd->add_option("--prefix", ws_prefix, "Use only the first N symbols");

  // reduce / classify
  std::string red_word;
  bool red_trace = false;
  auto* red_cmd = app.add_subcommand("reduce", "Reduce a word to a fixed point of phi_1..phi_7");
  red_cmd->add_option("--word", red_word, "ASCII 0/1 word")->required();
  red_cmd->add_flag("--trace", red_trace, "Print each step");

  std::string cls_word;
  auto* cls_cmd = app.add_subcommand("classify", "Classify a fixed point into its normal form");
  cls_cmd->add_option("--word", cls_word, "ASCII 0/1 word")->required();

  // construct / construct-stats
  ConstructionSpec con;
  std::size_t con_len = 0;
  std::uint64_t con_stride = 0;
  std::string con_out;
  auto* con_cmd = app.add_subcommand("construct", "Emit an extremal construction word");
  auto* cst_cmd = app.add_subcommand("construct-stats", "Rates of an extremal construction word");
  for (auto* cmd : {con_cmd, cst_cmd}) {
    cmd->add_option("--bound", con.bound, "lower|upper")
        ->required()
        ->check(CLI::IsMember({"lower", "upper"}));
    cmd->add_option("--rate", con.rate, "Target zero rate NUM/DEN")->required();
    cmd->add_option("--len", con_len, "Prefix length")->required();
  }
  con_cmd->add_option("--out", con_out, "Write to FILE instead of stdout");
  cst_cmd->add_option("--stride", con_stride, "Emit a row every STRIDE symbols");

  // prng
  std::uint64_t prng_n = 0;
  std::string prng_seed;
  std::size_t prng_steps = 0;
  auto* prng_cmd = app.add_subcommand("prng", "Iterate the integer logistic map");
  prng_cmd->add_option("--n", prng_n, "Accuracy parameter")->required();
  prng_cmd->add_option("--seed", prng_seed, "Initial state s_0 (decimal)")->required();
  prng_cmd->add_option("--steps", prng_steps, "Number of steps")->required();

  // verify
  std::string ver_suite;
  std::size_t ver_len = 0;
  auto* ver_cmd = app.add_subcommand("verify", "Exhaustive invariant checks");
  ver_cmd->add_option("--suite", ver_suite, "phi|table1|table2|reduce")
      ->required()
      ->check(CLI::IsMember({"phi", "table1", "table2", "reduce"}));
  ver_cmd->add_option("--max-len", ver_len, "Largest word length")->required();

  // rates
  std::string rates_source;
  std::uint64_t rates_max = 0, rates_stride = 1;
  ConstructionSpec rates_con;
  auto* rates_cmd = app.add_subcommand("rates", "CSV rate series for plotting");
  rates_cmd->add_option("--source", rates_source, "sqrt2-patterns|undesirable-exact|construction")
      ->required()
      ->check(CLI::IsMember({"sqrt2-patterns", "undesirable-exact", "construction"}));
  rates_cmd->add_option("--max", rates_max, "Largest n")->required();
  rates_cmd->add_option("--stride", rates_stride, "Row spacing")->capture_default_str();
  rates_cmd->add_option("--bound", rates_con.bound, "lower|upper (construction source)")
      ->check(CLI::IsMember({"lower", "upper"}));
  rates_cmd->add_option("--rate", rates_con.rate, "NUM/DEN (construction source)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sqrt2_cmd->parsed()) {
      const auto bits = sqrt2_fraction_bits(sqrt2_bits, sqrt2_max);
      OutputTarget target(out, sqrt2_out);
      target.get() << bits.word().to_string() << '\n';
      return kExitOk;
    }

    if (und_cmd->parsed()) {
      AuditOptions options;
      options.methods.clear();
      for (const auto& m : und_methods) {
        const Method method = parse_method(m);
        if (std::find(options.methods.begin(), options.methods.end(), method) ==
            options.methods.end())
          options.methods.push_back(method);
      }
      options.brute_cap = und_cap;
      options.lemma2_precision = und_precision;
      const auto reports = audit_range(und_max, options);

      OutputTarget target(out, und_csv);
      auto& csv = target.get();
      csv << "n,exact,brute,lemma2,patterns,witness_x";
      if (und_cumulative) csv << ",d_n,rate,rate_decimal";
      csv << '\n';
      std::uint64_t d = 0;
      for (const auto& r : reports) {
        csv << r.n.value() << ',' << cell(r.exact) << ',' << cell(r.brute) << ','
            << (r.lemma2 ? std::string(to_string(*r.lemma2)) : "") << ',' << cell(r.patterns)
            << ',' << (r.witness_x ? r.witness_x->get_str() : "");
        if (und_cumulative) {
          bool hit = false;
          switch (options.methods.front()) {
            case Method::exact: hit = *r.exact; break;
            case Method::brute: hit = *r.brute; break;
            case Method::lemma2: hit = *r.lemma2 == TailComparison::implied; break;
            case Method::patterns: hit = *r.patterns; break;
          }
          d += hit ? 1 : 0;
          const Rational rate = make_rational(static_cast<unsigned long>(d),
                                              static_cast<unsigned long>(r.n.value()));
          csv << ',' << d << ',' << to_fraction_string(rate) << ',' << to_decimal_string(rate);
        }
        csv << '\n';
      }
      if (!und_csv.empty())
        out << "wrote " << reports.size() << " rows to " << und_csv << '\n';
      for (const auto& r : reports) {
        if (!report_is_consistent(r)) {
          err << "inconsistent verdicts at n = " << r.n.value() << '\n';
          return kExitVerifyFailed;
        }
      }
      return kExitOk;
    }

    if (ws_cmd->parsed()) {
      if (ws_word_opt->count() == 0 && ws_file_opt->count() == 0)
        throw DomainError("word-stats needs --word or --file");
      const BinaryWord w = BinaryWord::from_string(ws_file.empty() ? ws_word : read_word_file(ws_file));
      const auto r = prefix_rates(w, ws_prefix.value_or(w.size()));
      out << "n,z_count,p_count,z_rate,p_rate\n"
          << r.n << ',' << r.z_count << ',' << r.p_count << ',' << to_fraction_string(r.z_rate)
          << ',' << to_fraction_string(r.p_rate) << '\n';
      return kExitOk;
    }

    if (red_cmd->parsed()) {
      const auto red = reduce_to_normal_form(BinaryWord::from_string(red_word), red_trace);
      if (red_trace)
        for (const auto& step : red.trace)
          out << step.k << ": " << step.before.to_string() << " -> " << step.after.to_string()
              << '\n';
      out << red.normal.to_string() << '\n';
      return kExitOk;
    }

    if (cls_cmd->parsed()) {
      const BinaryWord u = BinaryWord::from_string(cls_word);
      const auto c = classify_normal_form(u);
      const auto opt = [](const std::optional<std::size_t>& v) {
        return v ? std::to_string(*v) : std::string();
      };
      out << "type,p,q,s,N,Z,P\n"
          << c.type_tag << ',' << c.p << ',' << opt(c.q) << ',' << opt(c.s) << ',' << u.size()
          << ',' << u.count_zeros() << ',' << count_pattern_indices(u) << '\n';
      return kExitOk;
    }

    if (con_cmd->parsed()) {
      const BinaryWord w = construction_word(con, con_len);
      OutputTarget target(out, con_out);
      target.get() << w.to_string() << '\n';
      return kExitOk;
    }

    if (cst_cmd->parsed()) {
      const auto r = RationalRate::parse(con.rate);
      const BinaryWord w = construction_word(con, con_len);
      const Rational target_z = r.value();
      const Rational target_p = con.bound == "lower" ? Rational((5 * r.value() - 2) / 3) : r.value();
      const auto counts = prefix_pattern_counts(w);
      const std::uint64_t stride = con_stride == 0 ? std::max<std::uint64_t>(con_len, 1) : con_stride;
      out << "n,z_rate,p_rate,target_z,target_p\n";
      std::size_t zeros = 0, next = stride;
      for (std::size_t n = 1; n <= w.size(); ++n) {
        if (w[n] == 0) ++zeros;
        if (n != next) continue;
        next += stride;
        const auto nn = static_cast<unsigned long>(n);
        out << n << ',' << to_decimal_string(make_rational(static_cast<unsigned long>(zeros), nn))
            << ',' << to_decimal_string(make_rational(static_cast<unsigned long>(counts[n]), nn))
            << ',' << to_decimal_string(target_z) << ',' << to_decimal_string(target_p) << '\n';
      }
      return kExitOk;
    }

    if (prng_cmd->parsed()) {
      BigInt seed;
      if (prng_seed.empty() || seed.set_str(prng_seed, 10) != 0)
        throw DomainError("--seed must be a decimal integer");
      const auto trace = iterate_states(AccuracyParam(prng_n), seed, prng_steps);
      for (const auto& s : trace.states) out << s.get_str() << '\n';
      return kExitOk;
    }

    if (ver_cmd->parsed()) {
      const auto result = run_verify_suite(ver_suite, ver_len);
      out << "suite=" << result.suite << " max_len=" << ver_len << " cases=" << result.cases
          << " violations=" << result.violation_count << " wall_time_s=" << result.wall_time.count()
          << '\n';
      for (const auto& v : result.violations) out << "  " << v.input << ": " << v.detail << '\n';
      return result.ok() ? kExitOk : kExitVerifyFailed;
    }

    if (rates_cmd->parsed()) {
      const auto rows =
          emit_rate_series(rates_max, rates_stride, parse_rate_source(rates_source), rates_con);
      out << "n,count,rate\n";
      for (const auto& row : rows)
        out << row.n << ',' << row.count << ',' << to_decimal_string(row.rate) << '\n';
      return kExitOk;
    }
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lpat::cli
