#pragma once

// Command-line front end: table, count, verify, bench.
//
// Exit codes: 0 success, 1 identity failure or pipeline disagreement,
// 2 usage or parse error. Results go to `out`, diagnostics to `err`.

#include "composerie/closed_forms.hpp"
#include "composerie/compositions.hpp"
#include "composerie/ring.hpp"
#include "composerie/series.hpp"
#include "composerie/verify.hpp"
#include "composerie/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace composerie::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// `int` or `mod:p` with p >= 2.
struct RingSpec {
  std::optional<std::uint64_t> modulus;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

inline RingSpec parse_ring(std::string_view text) {
  if (text == "int") return {};
  if (text.substr(0, 4) == "mod:") {
    auto digits = text.substr(4);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw UsageError("ring: cannot parse modulus in '" + std::string(text) + "'");
    }
    if (p < 2) throw UsageError("ring: mod:p requires p >= 2");
    if (p > (std::uint64_t{1} << 63)) throw UsageError("ring: mod:p requires p <= 2^63");
    return {p};
  }
  throw UsageError("ring: expected 'int' or 'mod:p', got '" + std::string(text) + "'");
}

inline std::string to_string(const RingSpec& r) {
  return r.modulus ? "mod:" + std::to_string(*r.modulus) : "int";
}

enum class Format { Plain, Csv, Json };

inline std::string to_string(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    default: return "plain";
  }
}

struct RunConfig {
  std::string command;
  std::string family = "all-ones";
  bool all_families = false;
  std::size_t max_n = 12;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::string ring = "int";
  Format format = Format::Plain;
  std::optional<std::size_t> oracle_max;  // unset: environment, then default
  std::vector<std::string> pipelines;
  std::vector<std::size_t> orders;
  std::vector<std::uint64_t> powers;
  bool ring_given = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Oracle bound: --oracle-max, then COMPOSERIE_ORACLE_MAX, then the default.
inline std::size_t effective_oracle_max(const RunConfig& c) {
  if (c.oracle_max) return *c.oracle_max;
  if (const char* env = std::getenv("COMPOSERIE_ORACLE_MAX")) {
    std::size_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("COMPOSERIE_ORACLE_MAX: expected a nonnegative integer, got '" + std::string(s) + "'");
    }
    return v;
  }
  return kDefaultOracleMax;
}

namespace detail {

inline std::unique_ptr<CLI::App> make_app(RunConfig& c) {
  auto app = std::make_unique<CLI::App>("Weighted integer composition counts and identity checks", "composerie");
  app->require_subcommand(1);

  const std::map<std::string, Format> formats{{"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", c.ring, "int or mod:p");
    sub->add_option("--format", c.format, "plain, csv or json")
        ->transform(CLI::CheckedTransformer(formats).description(""))
        ->type_name("plain|csv|json");
  };

  auto* table = app->add_subcommand("table", "Print the triangle C(n,k) and row totals");
  table->add_option("--family", c.family, "weight family")->required();
  table->add_option("--max-n", c.max_n, "largest n")->required();
  add_common(table);

  auto* count = app->add_subcommand("count", "Count compositions of n (into k parts if -k is given)");
  count->add_option("--family", c.family, "weight family")->required();
  count->add_option("-n,--size", c.n, "number being composed")->required();
  count->add_option("-k,--parts", c.k, "number of parts; omit for all k");
  count->add_option("--pipeline", c.pipelines, "rec, gf, oracle, closed (repeat or comma-separate)")
      ->delimiter(',')
      ->check(CLI::IsMember({"rec", "gf", "oracle", "closed"}));
  count->add_option("--oracle-max", c.oracle_max, "largest n the oracle accepts");
  add_common(count);

  auto* verify = app->add_subcommand("verify", "Cross-check every pipeline and identity for a family");
  auto* fam = verify->add_option("--family", c.family, "weight family");
  auto* all = verify->add_flag("--all", c.all_families, "every standard family");
  fam->excludes(all);
  verify->add_option("--max-n", c.max_n, "largest n");
  verify->add_option("--oracle-max", c.oracle_max, "largest n the oracle accepts");
  add_common(verify);

  auto* bench = app->add_subcommand("bench", "Compare squaring and naive series powers");
  bench->add_option("--family", c.family, "weight family");
  bench->add_option("--order", c.orders, "series order (repeatable)")->delimiter(',');
  bench->add_option("--power", c.powers, "exponent k (repeatable)")->delimiter(',');
  add_common(bench);

  return app;
}

inline void parse_into(CLI::App& app, RunConfig& c, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  app.parse(args);
  for (const auto* sub : app.get_subcommands()) c.command = sub->get_name();
  if (c.command == "verify" && !c.all_families && app.get_subcommand("verify")->count("--family") == 0) {
    throw CLI::ValidationError("verify", "one of --family or --all is required");
  }
  c.ring_given = app.get_subcommand(c.command)->count("--ring") > 0;
}

}  // namespace detail

/// Parses arguments (without the program name). Throws CLI::Error on
/// malformed flags and UsageError/FamilyError on bad values.
inline RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig c;
  auto app = detail::make_app(c);
  detail::parse_into(*app, c, args);
  (void)parse_ring(c.ring);
  if (!(c.command == "verify" && c.all_families)) (void)parse_family(c.family);
  return c;
}

/// Inverse of parse_config.
inline std::vector<std::string> to_args(const RunConfig& c) {
  std::vector<std::string> a{c.command};
  auto put = [&](std::string flag, std::string value) {
    a.push_back(std::move(flag));
    a.push_back(std::move(value));
  };
  if (c.command == "verify" && c.all_families) {
    a.push_back("--all");
  } else {
    put("--family", c.family);
  }
  if (c.command == "table" || c.command == "verify") put("--max-n", std::to_string(c.max_n));
  if (c.n) put("-n", std::to_string(*c.n));
  if (c.k) put("-k", std::to_string(*c.k));
  for (const auto& p : c.pipelines) put("--pipeline", p);
  if (c.oracle_max) put("--oracle-max", std::to_string(*c.oracle_max));
  for (auto o : c.orders) put("--order", std::to_string(o));
  for (auto p : c.powers) put("--power", std::to_string(p));
  if (c.ring_given) put("--ring", c.ring);
  put("--format", to_string(c.format));
  return a;
}

namespace detail {

using nlohmann::json;

template <CommutativeRing R>
std::string str(const typename R::value_type& v) {
  return composerie::to_string(v);
}

template <typename Fn>
int with_ring(const RingSpec& spec, Fn&& fn) {
  if (spec.modulus) return fn(ModularRing(*spec.modulus));
  return fn(IntegerRing{});
}

template <CommutativeRing R>
int run_table(const R& ring, const RunConfig& c, std::ostream& out) {
  const Family family = parse_family(c.family);
  const auto table = build_table(ring, family_to_weights(family), c.max_n);
  switch (c.format) {
    case Format::Csv:
      out << "n,k,value\n";
      for (std::size_t n = 0; n <= c.max_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) out << n << ',' << k << ',' << str<R>(table.at(n, k)) << '\n';
      }
      for (std::size_t n = 0; n <= c.max_n; ++n) out << n << ",," << str<R>(table.row_totals[n]) << '\n';
      break;
    case Format::Json: {
      json doc{{"family", to_string(family)}, {"ring", ring.name()}, {"cells", json::array()}, {"totals", json::array()}};
      for (std::size_t n = 0; n <= c.max_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) doc["cells"].push_back({{"n", n}, {"k", k}, {"value", str<R>(table.at(n, k))}});
        doc["totals"].push_back({{"n", n}, {"value", str<R>(table.row_totals[n])}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Plain:
      out << "# " << to_string(family) << " over " << ring.name() << "\n# n: C(n,0) .. C(n,n) | C(n)\n";
      for (std::size_t n = 0; n <= c.max_n; ++n) {
        out << n << ':';
        for (std::size_t k = 0; k <= n; ++k) out << ' ' << str<R>(table.at(n, k));
        out << " | " << str<R>(table.row_totals[n]) << '\n';
      }
      break;
  }
  return kExitOk;
}

template <CommutativeRing R>
typename R::value_type count_with(const R& ring, const std::string& pipeline, const Family& family,
                                  std::size_t n, std::optional<std::size_t> k, std::size_t oracle_max) {
  const auto r = family_to_weights(family);
  if (pipeline == "rec") return k ? count_rec(ring, r, n, *k) : count_all_rec(ring, r, n);
  if (pipeline == "gf") return k ? count_via_gf(ring, r, n, *k) : count_all_via_gf(ring, r, n);
  if (pipeline == "oracle") {
    if (k) return oracle_count(ring, r, n, *k, oracle_max);
    auto acc = n == 0 ? ring.one() : ring.zero();
    for (std::size_t j = 1; j <= n; ++j) acc += oracle_count(ring, r, n, j, oracle_max);
    return acc;
  }
  // closed
  const auto nn = static_cast<std::int64_t>(n);
  auto closed_at = [&](std::int64_t kk) {
    auto v = closed_count(family, nn, kk);
    if (!v) throw UsageError("family " + to_string(family) + " has no closed formula; use rec, gf or oracle");
    return ring.from_integer(*v);
  };
  if (k) return closed_at(static_cast<std::int64_t>(*k));
  auto acc = closed_at(0);
  for (std::int64_t j = 1; j <= nn; ++j) acc += closed_at(j);
  return acc;
}

template <CommutativeRing R>
int run_count(const R& ring, const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(c.family);
  std::vector<std::string> pipelines = c.pipelines.empty() ? std::vector<std::string>{"gf"} : c.pipelines;
  const std::size_t oracle_max = effective_oracle_max(c);
  std::vector<typename R::value_type> values;
  for (const auto& p : pipelines) values.push_back(count_with(ring, p, family, *c.n, c.k, oracle_max));

  bool agree = std::all_of(values.begin(), values.end(), [&](const auto& v) { return v == values.front(); });
  switch (c.format) {
    case Format::Json: {
      json doc{{"family", to_string(family)}, {"ring", ring.name()}, {"n", *c.n}};
      doc["k"] = c.k ? json(*c.k) : json(nullptr);
      json per = json::object();
      for (std::size_t i = 0; i < pipelines.size(); ++i) per[pipelines[i]] = str<R>(values[i]);
      doc["pipelines"] = per;
      doc["value"] = str<R>(values.front());
      doc["agree"] = agree;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "family,ring,n,k,pipeline,value\n";
      for (std::size_t i = 0; i < pipelines.size(); ++i) {
        out << to_string(family) << ',' << ring.name() << ',' << *c.n << ',' << (c.k ? std::to_string(*c.k) : "")
            << ',' << pipelines[i] << ',' << str<R>(values[i]) << '\n';
      }
      break;
    case Format::Plain:
      if (pipelines.size() == 1) {
        out << str<R>(values.front()) << '\n';
      } else {
        for (std::size_t i = 0; i < pipelines.size(); ++i) out << pipelines[i] << ' ' << str<R>(values[i]) << '\n';
      }
      break;
  }
  if (!agree) {
    err << "composerie: pipelines disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

template <CommutativeRing R>
void write_report(const VerificationReport<R>& rep, Format format, std::ostream& out, json* doc) {
  switch (format) {
    case Format::Json: {
      json checks = json::array();
      for (const auto& ch : rep.checks) {
        checks.push_back({{"identity", ch.identity},
                          {"n", ch.n},
                          {"k", ch.k ? json(*ch.k) : json(nullptr)},
                          {"expected", str<R>(ch.expected)},
                          {"actual", str<R>(ch.actual)},
                          {"pass", ch.pass}});
      }
      doc->push_back({{"family", to_string(rep.family)},
                      {"ring", rep.ring},
                      {"max_n", rep.max_n},
                      {"max_k", rep.max_k},
                      {"checks", std::move(checks)},
                      {"failures", rep.failures()},
                      {"passed", rep.passed()}});
      break;
    }
    case Format::Csv:
      for (const auto& ch : rep.checks) {
        out << to_string(rep.family) << ',' << ch.identity << ',' << ch.n << ',' << (ch.k ? std::to_string(*ch.k) : "")
            << ',' << str<R>(ch.expected) << ',' << str<R>(ch.actual) << ',' << (ch.pass ? "pass" : "FAIL") << '\n';
      }
      break;
    case Format::Plain:
      out << to_string(rep.family) << " [" << rep.ring << ", n <= " << rep.max_n << "]: " << rep.checks.size()
          << " checks, " << rep.failures() << " failed\n";
      for (const auto& ch : rep.checks) {
        if (ch.pass) continue;
        out << "  FAIL " << ch.identity << " n=" << ch.n;
        if (ch.k) out << " k=" << *ch.k;
        out << " expected=" << str<R>(ch.expected) << " actual=" << str<R>(ch.actual) << '\n';
      }
      break;
  }
}

template <CommutativeRing R>
int run_verify(const R& ring, const RunConfig& c, std::ostream& out) {
  std::vector<Family> families = c.all_families ? standard_families() : std::vector<Family>{parse_family(c.family)};
  VerifyOptions options{effective_oracle_max(c)};

  std::vector<std::future<VerificationReport<R>>> jobs;
  for (const auto& f : families) {
    jobs.push_back(std::async(std::launch::async, [&ring, f, &c, options] {
      return verify_family(ring, f, c.max_n, options);
    }));
  }

  json doc = json::array();
  if (c.format == Format::Csv) out << "family,identity,n,k,expected,actual,pass\n";
  std::size_t failures = 0;
  for (auto& job : jobs) {
    auto rep = job.get();
    failures += rep.failures();
    write_report(rep, c.format, out, &doc);
  }
  if (c.format == Format::Json) out << doc.dump(2) << '\n';
  return failures == 0 ? kExitOk : kExitFailure;
}

struct BenchRow {
  std::string ring;
  std::size_t order;
  std::uint64_t power;
  std::string method;
  std::size_t mul_calls;
  double seconds;
};

template <CommutativeRing R>
bool bench_one(const R& ring, const WeightSequence& r, std::size_t order, std::uint64_t k, std::vector<BenchRow>& rows,
               std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const auto base = series_from_weights(ring, r, order);

  MulCounter squaring_calls;
  auto t0 = clock::now();
  const auto fast = series_pow(base, k, squaring_calls);
  auto t1 = clock::now();
  MulCounter naive_calls;
  const auto slow = series_pow_naive(base, k, naive_calls);
  auto t2 = clock::now();

  if (!(fast == slow)) {
    err << "composerie: squaring and naive powers differ for order " << order << ", k " << k << " over "
        << ring.name() << '\n';
    return false;
  }
  rows.push_back({ring.name(), order, k, "squaring", squaring_calls.calls,
                  std::chrono::duration<double>(t1 - t0).count()});
  rows.push_back({ring.name(), order, k, "naive", naive_calls.calls, std::chrono::duration<double>(t2 - t1).count()});
  return true;
}

inline int run_bench(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto r = family_to_weights(parse_family(c.family));
  const std::vector<std::size_t> orders = c.orders.empty() ? std::vector<std::size_t>{256} : c.orders;
  const std::vector<std::uint64_t> powers = c.powers.empty() ? std::vector<std::uint64_t>{32} : c.powers;
  std::vector<RingSpec> rings;
  if (c.ring_given) {
    rings.push_back(parse_ring(c.ring));
  } else {
    rings = {RingSpec{}, RingSpec{2147483647}};
  }
  for (auto o : orders) {
    if (o == 0) throw UsageError("bench: --order must be >= 1");
  }

  std::vector<BenchRow> rows;
  for (const auto& spec : rings) {
    for (auto order : orders) {
      for (auto k : powers) {
        bool ok = with_ring(spec, [&](const auto& ring) { return bench_one(ring, r, order, k, rows, err) ? 0 : 1; }) == 0;
        if (!ok) return kExitFailure;
      }
    }
  }

  switch (c.format) {
    case Format::Json: {
      json doc = json::array();
      for (const auto& row : rows) {
        doc.push_back({{"ring", row.ring}, {"order", row.order}, {"k", row.power}, {"method", row.method},
                       {"mul_calls", row.mul_calls}, {"seconds", row.seconds}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "ring,order,k,method,mul_calls,seconds\n";
      for (const auto& row : rows) {
        out << row.ring << ',' << row.order << ',' << row.power << ',' << row.method << ',' << row.mul_calls << ','
            << row.seconds << '\n';
      }
      break;
    case Format::Plain:
      out << std::left << std::setw(16) << "ring" << std::setw(8) << "order" << std::setw(8) << "k" << std::setw(10)
          << "method" << std::setw(10) << "muls" << "seconds\n";
      for (const auto& row : rows) {
        out << std::setw(16) << row.ring << std::setw(8) << row.order << std::setw(8) << row.power << std::setw(10)
            << row.method << std::setw(10) << row.mul_calls << std::fixed << std::setprecision(6) << row.seconds
            << '\n';
      }
      break;
  }
  return kExitOk;
}

}  // namespace detail

/// Executes a parsed configuration.
inline int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "bench") return detail::run_bench(c, out, err);
  const RingSpec spec = parse_ring(c.ring);
  return detail::with_ring(spec, [&](const auto& ring) {
    if (c.command == "table") return detail::run_table(ring, c, out);
    if (c.command == "count") return detail::run_count(ring, c, out, err);
    return detail::run_verify(ring, c, out);
  });
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  auto app = detail::make_app(c);
  try {
    detail::parse_into(*app, c, args);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app->help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::Error& e) {
    err << "composerie: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return execute(c, out, err);
  } catch (const FamilyError& e) {
    err << "composerie: invalid family: " << e.what() << '\n';
  } catch (const OracleRangeError& e) {
    err << "composerie: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "composerie: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "composerie: " << e.what() << '\n';
  }
  return kExitUsage;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace composerie::cli
