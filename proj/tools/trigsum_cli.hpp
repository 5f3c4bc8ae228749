#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes numbers to `out`, diagnostics to `err`.
//
// Exit status: 0 success (for verify/sweep: every check passed), 1 a check
// failed, 2 usage or evaluation error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trigsum/graph_io.hpp"
#include "trigsum/resistor.hpp"
#include "trigsum/serialize.hpp"
#include "trigsum/trig_sums.hpp"
#include "trigsum/verlinde.hpp"

namespace trigsum::cli {

enum class Format { Text, Json, Csv };

struct Options {
  std::string family;
  std::int64_t N = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t g = 2;
  std::int64_t k = 1;
  bool twisted = false;
  unsigned precision_bits = 256;
  std::string format = "text";
  std::string graph_file;
  std::int64_t N_max = 20;
  std::int64_t m_max = 5;
  std::int64_t rows = 2;
  std::vector<std::int64_t> from;
  std::vector<std::int64_t> to;
  std::int64_t a = 0;
  std::int64_t b = 1;
};

namespace detail {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct UsageError {
  std::string message;
};

inline Format parse_format(const std::string &name) {
  if (name == "text")
    return Format::Text;
  if (name == "json")
    return Format::Json;
  if (name == "csv")
    return Format::Csv;
  throw UsageError{"unknown format '" + name + "' (text, json, csv)"};
}

inline SumFamily family_or_throw(const std::string &name) {
  if (name.empty())
    throw UsageError{"--family is required"};
  if (const auto f = parse_family(name))
    return *f;
  std::string known;
  for (SumFamily f : all_families)
    known += (known.empty() ? "" : ", ") + std::string(family_name(f));
  throw UsageError{"unknown family '" + name + "' (" + known + ")"};
}

inline SumSpec spec_from(const Options &o) { return SumSpec{family_or_throw(o.family), o.N, o.l, o.m}; }

inline void emit_reports(const std::vector<VerificationReport> &reports, Format format, bool as_array,
                         std::ostream &out) {
  switch (format) {
  case Format::Text:
    for (const auto &r : reports)
      out << to_text(r) << '\n';
    break;
  case Format::Csv:
    out << csv_header() << '\n';
    for (const auto &r : reports)
      out << to_csv_row(r) << '\n';
    break;
  case Format::Json:
    if (as_array) {
      Json arr = Json::array();
      for (const auto &r : reports)
        arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    } else {
      out << to_json(reports.front()).dump(2) << '\n';
    }
    break;
  }
}

/// A single exact value with an optional numeric cross-check.
struct ValueReport {
  Json spec;
  Rational closed;
  std::optional<Float> oracle;
  unsigned precision_bits = 256;
};

inline bool value_passed(const ValueReport &v) {
  if (!v.oracle)
    return true;
  PrecisionScope scope(Precision::of(v.precision_bits));
  return abs(to_float(v.closed) - *v.oracle) < oracle_tolerance(Precision{v.precision_bits});
}

inline int emit_value(const ValueReport &v, Format format, std::ostream &out) {
  const bool passed = value_passed(v);
  switch (format) {
  case Format::Text:
    out << to_string(v.closed) << '\n';
    break;
  case Format::Json: {
    Json j;
    j["spec"] = v.spec;
    j["closed"] = to_string(v.closed);
    if (v.oracle) {
      PrecisionScope scope(Precision::of(v.precision_bits));
      j["oracle"] = format_float(*v.oracle, v.precision_bits);
      j["abs_error"] = format_float(abs(to_float(v.closed) - *v.oracle), v.precision_bits);
      j["precision_bits"] = v.precision_bits;
      j["passed"] = passed;
    }
    out << j.dump(2) << '\n';
    break;
  }
  case Format::Csv: {
    std::string keys;
    std::string values;
    for (const auto &[key, value] : v.spec.items()) {
      keys += key + ",";
      values += (value.is_string() ? value.get<std::string>() : value.dump()) + ",";
    }
    out << keys << "closed" << (v.oracle ? ",oracle" : "") << '\n';
    out << values << to_string(v.closed);
    if (v.oracle)
      out << ',' << format_float(*v.oracle, v.precision_bits);
    out << '\n';
    break;
  }
  }
  return passed ? exit_ok : exit_check_failed;
}

inline GridPoint point_from(const std::vector<std::int64_t> &xy, GridPoint fallback, const char *flag) {
  if (xy.empty())
    return fallback;
  if (xy.size() != 2)
    throw UsageError{std::string(flag) + " takes two values: row col"};
  return {xy[0], xy[1]};
}

inline int cmd_eval(const Options &o, Format f, std::ostream &out) {
  const SumSpec spec = spec_from(o);
  ValueReport v{to_json(spec), evaluate(spec), std::nullopt, o.precision_bits};
  return emit_value(v, f, out);
}

inline int cmd_verify(const Options &o, Format f, std::ostream &out) {
  const auto report = verify(spec_from(o), Precision::of(o.precision_bits));
  emit_reports({report}, f, false, out);
  return report.passed ? exit_ok : exit_check_failed;
}

inline int cmd_sweep(const Options &o, Format f, std::ostream &out) {
  if (o.N_max < 2 || o.m_max < 1)
    throw UsageError{"--N-max must be at least 2 and --m-max at least 1"};
  std::vector<SumFamily> families;
  if (o.family == "all")
    families.assign(all_families.begin(), all_families.end());
  else
    families.push_back(family_or_throw(o.family));
  const Precision p = Precision::of(o.precision_bits);
  std::vector<VerificationReport> reports;
  for (SumFamily fam : families)
    for (const auto &spec : admissible_grid(fam, o.N_max, o.m_max))
      reports.push_back(verify(spec, p));
  emit_reports(reports, f, true, out);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed; });
  return all ? exit_ok : exit_check_failed;
}

inline int cmd_resistance(const Options &o, Format f, std::ostream &out) {
  const Precision p = Precision::of(o.precision_bits);
  if (!o.graph_file.empty()) {
    const UnitGraph g = read_edge_list(o.graph_file);
    Json spec;
    spec["graph_file"] = o.graph_file;
    spec["a"] = o.a;
    spec["b"] = o.b;
    return emit_value({spec, laplacian_resistance(g, o.a, o.b), std::nullopt, p.bits}, f, out);
  }
  if (o.N < 1)
    throw UsageError{"resistance needs --N (grid columns) or --graph-file"};
  const GridNetwork net{o.rows, o.N, 1, 1};
  const GridPoint p1 = point_from(o.from, {0, 0}, "--from");
  const GridPoint p2 = point_from(o.to, {o.rows - 1, o.N - 1}, "--to");
  const bool corners = o.rows == 2 && p1.row == 0 && p1.col == 0 && p2.row == 1 && p2.col == o.N - 1;
  const Rational exact = corners ? corner_to_corner_2xN(o.N) : grid_resistance_exact(net, p1, p2);
  Json spec;
  spec["rows"] = o.rows;
  spec["cols"] = o.N;
  spec["from"] = {p1.row, p1.col};
  spec["to"] = {p2.row, p2.col};
  return emit_value({spec, exact, wu_resistance(net, p1, p2, p), p.bits}, f, out);
}

inline int cmd_kirchhoff(const Options &o, Format f, std::ostream &out) {
  const Precision p = Precision::of(o.precision_bits);
  if (!o.graph_file.empty()) {
    Json spec;
    spec["graph_file"] = o.graph_file;
    return emit_value({spec, kirchhoff_exact(read_edge_list(o.graph_file)), std::nullopt, p.bits}, f, out);
  }
  if (o.N < 1)
    throw UsageError{"kirchhoff needs --N or --graph-file"};
  Json spec;
  spec["rows"] = 2;
  spec["cols"] = o.N;
  return emit_value({spec, kirchhoff_2xN(o.N), kirchhoff_2xN_spectral(o.N, p), p.bits}, f, out);
}

inline int cmd_verlinde(const Options &o, Format f, std::ostream &out) {
  Json spec;
  spec["g"] = o.g;
  spec["k"] = o.k;
  spec["twisted"] = o.twisted;
  const Rational dim = block_dimension(BlockDimensionQuery{o.g, o.k, o.twisted});
  return emit_value({spec, dim, std::nullopt, o.precision_bits}, f, out);
}

inline int cmd_oracle(const Options &o, Format f, std::ostream &out) {
  const SumSpec spec = spec_from(o);
  const Precision p = Precision::of(o.precision_bits);
  PrecisionScope scope(p);
  const std::string value = format_float(oracle_trig_sum(spec, p), p.bits);
  switch (f) {
  case Format::Text:
    out << value << '\n';
    break;
  case Format::Json: {
    Json j;
    j["spec"] = to_json(spec);
    j["oracle"] = value;
    j["precision_bits"] = p.bits;
    out << j.dump(2) << '\n';
    break;
  }
  case Format::Csv:
    out << "family,N,l,m,oracle\n"
        << family_name(spec.family) << ',' << spec.N << ',' << spec.l << ',' << spec.m << ',' << value << '\n';
    break;
  }
  return exit_ok;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact trigonometric sums, resistor networks and conformal block dimensions"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App *sub) {
    sub->add_option("--precision-bits", o.precision_bits, "oracle precision in bits (>= 64)")->capture_default_str();
    sub->add_option("--format", o.format, "text, json or csv")->capture_default_str();
  };
  const auto sum_options = [&](CLI::App *sub) {
    sub->add_option("--family", o.family, "sum family (cycle-r, path-f, ..., f2)");
    sub->add_option("--N", o.N, "modulus N");
    sub->add_option("--l", o.l, "argument l");
    sub->add_option("--m", o.m, "power m");
  };

  auto *eval = app.add_subcommand("eval", "exact closed form of one sum");
  auto *verify_cmd = app.add_subcommand("verify", "closed form against the direct-summation oracle");
  auto *sweep = app.add_subcommand("sweep", "verify every admissible spec up to --N-max, --m-max");
  auto *resistance = app.add_subcommand("resistance", "two-point resistance of a grid or edge-list graph");
  auto *kirchhoff = app.add_subcommand("kirchhoff", "Kirchhoff index of the 2xN grid or an edge-list graph");
  auto *verlinde = app.add_subcommand("verlinde", "dimension of the space of conformal blocks");
  auto *oracle = app.add_subcommand("oracle", "direct summation only");

  for (auto *sub : {eval, verify_cmd, oracle}) {
    sum_options(sub);
    common(sub);
  }
  sweep->add_option("--family", o.family, "sum family, or 'all'");
  sweep->add_option("--N-max", o.N_max)->capture_default_str();
  sweep->add_option("--m-max", o.m_max)->capture_default_str();
  common(sweep);

  resistance->add_option("--N", o.N, "grid columns");
  resistance->add_option("--rows", o.rows, "grid rows")->capture_default_str();
  resistance->add_option("--from", o.from, "row col of the first node")->expected(2);
  resistance->add_option("--to", o.to, "row col of the second node")->expected(2);
  resistance->add_option("--graph-file", o.graph_file, "edge-list file");
  resistance->add_option("--a", o.a, "first node of the edge-list graph")->capture_default_str();
  resistance->add_option("--b", o.b, "second node of the edge-list graph")->capture_default_str();
  common(resistance);

  kirchhoff->add_option("--N", o.N, "columns of the 2xN grid");
  kirchhoff->add_option("--graph-file", o.graph_file, "edge-list file");
  common(kirchhoff);

  verlinde->add_option("--g", o.g, "genus")->capture_default_str();
  verlinde->add_option("--k", o.k, "level")->capture_default_str();
  verlinde->add_flag("--twisted", o.twisted, "SO(3) (twisted) blocks");
  common(verlinde);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return detail::exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return detail::exit_usage;
  }

  try {
    const Format f = detail::parse_format(o.format);
    if (eval->parsed())
      return detail::cmd_eval(o, f, out);
    if (verify_cmd->parsed())
      return detail::cmd_verify(o, f, out);
    if (sweep->parsed())
      return detail::cmd_sweep(o, f, out);
    if (resistance->parsed())
      return detail::cmd_resistance(o, f, out);
    if (kirchhoff->parsed())
      return detail::cmd_kirchhoff(o, f, out);
    if (verlinde->parsed())
      return detail::cmd_verlinde(o, f, out);
    return detail::cmd_oracle(o, f, out);
  } catch (const detail::UsageError &e) {
    err << "usage error: " << e.message << '\n';
  } catch (const trigsum::error &e) {
    err << "error: " << e.what() << '\n';
  }
  return detail::exit_usage;
}

} // namespace trigsum::cli
