#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage error, 3 environment or resource error. Tables go to stdout;
// reports and diagnostics go to stderr.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permcycle/bijections.hpp"
#include "permcycle/errors.hpp"
#include "permcycle/multipoly.hpp"
#include "permcycle/oeis.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/series.hpp"
#include "permcycle/verify.hpp"

namespace permcycle::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, environment = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One row of an output table: size, the exponents of the requested
/// markers, and an exact count.
struct OutputRecord {
  int n = 0;
  Exponents exponents{};
  BigInt count;
};

/// Column names in marker order t, u, x, y.
inline const char* column_name(Marker m) {
  constexpr const char* names[] = {"k", "m", "l", "j"};
  return names[static_cast<int>(m)];
}

inline MarkerSet parse_stats(const std::string& text) {
  MarkerSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "cyc") out = out.with(Marker::t);
    else if (item == "fix") out = out.with(Marker::u);
    else if (item == "exc") out = out.with(Marker::x);
    else if (item == "inv") out = out.with(Marker::y);
    else throw UsageError("unknown statistic '" + item + "' (expected cyc, fix, exc, inv)");
  }
  if (out.empty()) throw UsageError("--stats selects no statistic");
  return out;
}

template <class Coeff>
void append_records(std::vector<OutputRecord>& rows, int n, const BasicMultiPoly<Coeff>& p) {
  // std::map order on (t, u, x, y) is already the row order.
  for (const auto& [e, c] : p.terms()) rows.push_back({n, e, BigInt(c)});
}

inline std::string render_csv(const std::vector<OutputRecord>& rows, MarkerSet markers) {
  std::ostringstream os;
  os << 'n';
  for (Marker m : all_markers)
    if (markers.has(m)) os << ',' << column_name(m);
  os << ",count\n";
  for (const auto& r : rows) {
    os << r.n;
    for (Marker m : all_markers)
      if (markers.has(m)) os << ',' << r.exponents[static_cast<std::size_t>(m)];
    os << ',' << r.count << '\n';
  }
  return os.str();
}

inline std::string render_json(const std::vector<OutputRecord>& rows, MarkerSet markers) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["n"] = r.n;
    for (Marker m : all_markers)
      if (markers.has(m)) obj[column_name(m)] = r.exponents[static_cast<std::size_t>(m)];
    obj["count"] = r.count.str();
    out.push_back(std::move(obj));
  }
  return out.dump(2) + "\n";
}

inline std::string render(const std::vector<OutputRecord>& rows, MarkerSet markers, const std::string& format) {
  return format == "json" ? render_json(rows, markers) : render_csv(rows, markers);
}

/// Oracle cap: PERMCYCLE_MAX_N when set, the library default otherwise.
inline int oracle_cap() {
  const char* env = std::getenv("PERMCYCLE_MAX_N");
  if (env == nullptr || *env == '\0') return default_oracle_max_n;
  int value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
    throw ResourceLimitError("PERMCYCLE_MAX_N is not a nonnegative integer: " + std::string(text));
  return value;
}

inline std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&text](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad range: " + text);
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const std::pair<int, int> r{to_int(std::string_view(text).substr(0, dots)),
                              to_int(std::string_view(text).substr(dots + 2))};
  if (r.first > r.second) throw UsageError("empty range: " + text);
  return r;
}

inline ClassId require_class(const std::string& text) {
  auto c = parse_class(text);
  if (!c) throw UsageError("--class accepts 312,4321 or 321,4123, got '" + text + "'");
  return *c;
}

inline GfName require_gf(const std::string& text) {
  auto g = parse_gf_name(text);
  if (!g) throw UsageError("--gf accepts A, B, C, D, F, G or H, got '" + text + "'");
  return *g;
}

inline std::string join(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s;
}

inline std::string describe_exponents(const Exponents& e, MarkerSet markers) {
  std::string s = "(";
  bool first = true;
  for (Marker m : all_markers) {
    if (!markers.has(m)) continue;
    s += (first ? "" : ", ") + std::string(column_name(m)) + "=" + std::to_string(e[static_cast<std::size_t>(m)]);
    first = false;
  }
  return s + ")";
}

struct Options {
  std::string class_text;
  int n = -1;
  std::string stats;
  bool involutions = false;
  std::string format = "csv";
  int threads = 1;
  std::string gf;
  int max_n = -1;
  int min_n = 1;
  std::string bijection;
  std::string range;
  std::string file;
  std::string source;
};

inline int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const std::optional<ClassId> c = o.class_text.empty() ? std::nullopt : std::optional(require_class(o.class_text));
  const MarkerSet markers = parse_stats(o.stats.empty() ? "cyc,fix,exc,inv" : o.stats);
  if (o.n < 0) throw UsageError("--n must be nonnegative");
  const OracleConfig cfg{oracle_cap(), o.threads};
  const MultiPoly dist = distribution(DistributionQuery{c, o.n, o.involutions}, cfg);
  std::vector<OutputRecord> rows;
  append_records(rows, o.n, specialize(dist, markers.complement()));
  out << render(rows, markers, o.format);
  err << "n=" << o.n << " total " << total(dist) << '\n';
  return ok;
}

inline int cmd_expand(const Options& o, std::ostream& out, std::ostream&) {
  const GfName g = require_gf(o.gf);
  const MarkerSet native = gf_markers(g);
  const MarkerSet markers = o.stats.empty() ? native : parse_stats(o.stats);
  for (Marker m : all_markers)
    if (markers.has(m) && !native.has(m))
      throw UsageError(std::string("generating function ") + gf_letter(g) + " has no marker " + marker_name(m));
  if (o.max_n < 0) throw UsageError("--max-n must be nonnegative");
  const BigSeriesPrefix series = expand_exact(g, o.max_n);
  std::vector<OutputRecord> rows;
  for (int n = 0; n <= o.max_n; ++n)
    append_records(rows, n, specialize(series.coeffs[static_cast<std::size_t>(n)], markers.complement()));
  out << render(rows, markers, o.format);
  return ok;
}

inline int cmd_verify(const Options& o, std::ostream&, std::ostream& err) {
  MapKind map;
  if (o.bijection == "phi") map = MapKind::phi;
  else if (o.bijection == "psi") map = MapKind::psi;
  else throw UsageError("--bijection accepts phi or psi");
  const auto [lo, hi] = parse_range(o.range);
  if (lo < 4) throw UsageError("the bijections are defined for n >= 4");
  const OracleConfig cfg{oracle_cap(), 1};
  if (hi > cfg.max_n) throw ResourceLimitError("n = " + std::to_string(hi) + " exceeds the oracle cap");

  bool all_passed = true;
  for (int n = lo; n <= hi; ++n) {
    const CertificationReport r = certify(map, n, cfg);
    err << to_string(map) << " n=" << n << " multiset=" << r.multiset_size << " image=" << r.image_size
        << " class=" << r.class_size << " roundtrip_failures=" << r.roundtrip_failures
        << " delta_violations=" << r.delta_violations << " cycle_mismatches=" << r.cycle_route_mismatches
        << (r.passed() ? " PASS" : " FAIL") << '\n';
    if (!r.passed()) {
      err << "counterexample: " << r.first_counterexample.value_or("(cardinality mismatch)") << '\n';
      all_passed = false;
      break;
    }
  }
  return all_passed ? ok : mismatch;
}

inline int cmd_crosscheck(const Options& o, std::ostream&, std::ostream& err) {
  const GfName g = require_gf(o.gf);
  const ClassId c = require_class(o.class_text);
  if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
  const OracleConfig cfg{oracle_cap(), o.threads};
  if (o.max_n > cfg.max_n) throw ResourceLimitError("n = " + std::to_string(o.max_n) + " exceeds the oracle cap");
  const MarkerSet markers = gf_markers(g);
  const SeriesPrefix series = expand(builtin_gf(g), o.max_n);

  std::vector<std::int64_t> totals;
  for (int n = 1; n <= o.max_n; ++n) {
    const MultiPoly from_gf = series.coeffs[static_cast<std::size_t>(n)];
    const MultiPoly from_oracle =
        specialize(distribution(DistributionQuery{c, n, gf_counts_involutions(g)}, cfg), markers.complement());
    if (from_gf != from_oracle) {
      // First exponent vector (in row order) where the two disagree.
      std::set<Exponents> keys;
      for (const auto& [e, v] : from_gf.terms()) keys.insert(e);
      for (const auto& [e, v] : from_oracle.terms()) keys.insert(e);
      for (const auto& e : keys) {
        if (from_gf.coefficient(e) == from_oracle.coefficient(e)) continue;
        err << "mismatch at n=" << n << " exponents " << describe_exponents(e, markers) << ": " << gf_letter(g)
            << " gives " << from_gf.coefficient(e) << ", oracle for " << to_string(c) << " gives "
            << from_oracle.coefficient(e) << '\n';
        break;
      }
      return mismatch;
    }
    totals.push_back(total(from_oracle));
    err << "n=" << n << " identical (" << from_gf.term_count() << " terms)\n";
  }
  err << gf_letter(g) << " vs oracle(" << to_string(c) << (gf_counts_involutions(g) ? ", involutions" : "")
      << "): identical, totals " << join(totals) << '\n';
  return ok;
}

inline int cmd_oeis(const Options& o, std::ostream&, std::ostream& err) {
  if (o.max_n < o.min_n || o.min_n < 1) throw UsageError("need 1 <= --min-n <= --max-n");
  std::vector<std::int64_t> full;
  if (o.source == "cyclic-312-4321") full = cyclic_sequence(ClassId::class312_4321, o.max_n);
  else if (o.source == "cyclic-321-4123") full = cyclic_sequence(ClassId::class321_4123, o.max_n);
  else if (o.source == "totals") full = series_totals(GfName::A, o.max_n);
  else if (o.source == "tribonacci") full = series_totals(GfName::D, o.max_n);
  else throw UsageError("--source accepts cyclic-312-4321, cyclic-321-4123, totals or tribonacci");
  const std::vector<std::int64_t> local(full.begin() + (o.min_n - 1), full.end());

  const BFile file = read_bfile(o.file);
  const auto shift = matching_shift(file, local, o.min_n);
  if (!shift) {
    err << "no shift in -3..3 aligns " << o.source << " (" << join(local) << ") with " << o.file << '\n';
    return mismatch;
  }
  err << "match: " << o.source << " n=" << o.min_n << ".." << o.max_n << " equals b-file entries "
      << o.min_n + *shift << ".." << o.max_n + *shift << " (shift " << *shift << "): " << join(local) << '\n';
  return ok;
}

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle enumeration of Av(312,4321) and Av(321,4123)", "permcycle"};
  app.require_subcommand(1);
  Options o;

  auto* enumerate = app.add_subcommand("enumerate", "Brute-force joint statistic distribution");
  enumerate->add_option("--class", o.class_text, "312,4321 or 321,4123 (omit for all of S_n)");
  enumerate->add_option("--n", o.n, "Permutation size")->required();
  enumerate->add_option("--stats", o.stats, "Comma list of cyc,fix,exc,inv (default: all)");
  enumerate->add_flag("--involutions", o.involutions, "Restrict to involutions");
  enumerate->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  enumerate->add_option("--threads", o.threads, "Oracle shards")->check(CLI::Range(1, 256));

  auto* expand_cmd = app.add_subcommand("expand", "Expand a built-in generating function");
  expand_cmd->add_option("--gf", o.gf, "A, B, C, D, F, G or H")->required();
  expand_cmd->add_option("--max-n", o.max_n, "Highest power of z")->required();
  expand_cmd->add_option("--stats", o.stats, "Subset of the generating function's statistics");
  expand_cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Certify phi or psi exhaustively");
  verify->add_option("--bijection", o.bijection, "phi or psi")->required();
  verify->add_option("--n", o.range, "Size or range a..b, a >= 4")->required();

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare a generating function with the oracle");
  crosscheck->add_option("--gf", o.gf, "A, B, C, D, F, G or H")->required();
  crosscheck->add_option("--class", o.class_text, "312,4321 or 321,4123")->required();
  crosscheck->add_option("--max-n", o.max_n, "Largest size compared")->required();
  crosscheck->add_option("--threads", o.threads, "Oracle shards")->check(CLI::Range(1, 256));

  auto* oeis = app.add_subcommand("oeis", "Compare a computed sequence with an OEIS b-file");
  oeis->add_option("--file", o.file, "Path to the b-file")->required();
  oeis->add_option("--source", o.source, "cyclic-312-4321, cyclic-321-4123, totals or tribonacci")->required();
  oeis->add_option("--max-n", o.max_n, "Last n compared")->required();
  oeis->add_option("--min-n", o.min_n, "First n compared (default 1)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (expand_cmd->parsed()) return cmd_expand(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (crosscheck->parsed()) return cmd_crosscheck(o, out, err);
    if (oeis->parsed()) return cmd_oeis(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return environment;
  } catch (const BFileError& e) {
    err << "error: " << e.what() << '\n';
    return environment;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return environment;
  }
  return usage;
}

}  // namespace permcycle::cli
