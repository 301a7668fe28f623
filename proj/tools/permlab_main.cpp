// permlab: repeated up/down pattern statistics on pattern-avoiding
// permutations.
//
// Subcommands: expectation, series, enumerate, sample, biject, verify.
// Every subcommand accepts --seed, --out, and --format; JSON output wraps the
// payload in a run manifest (command, parameters, seed, version, checksum of
// the payload), so identical invocations are byte-identical and auditable.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or guard error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlab/bijections.hpp"
#include "permlab/catalan.hpp"
#include "permlab/io.hpp"
#include "permlab/parallel.hpp"
#include "permlab/perm.hpp"
#include "permlab/rng.hpp"
#include "permlab/series.hpp"
#include "permlab/stats.hpp"
#include "permlab/totals.hpp"
#include "permlab/updown_dp.hpp"
#include "permlab/verify.hpp"
#include "permlab/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permlab;

struct CommonOpts {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts,
                const std::vector<std::string>& formats) {
  cmd->add_option("--seed", opts.seed, "Master seed for any randomized step");
  cmd->add_option("--out", opts.out, "Write output to this file instead of stdout");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember(formats));
}

void write_output(const CommonOpts& opts, const std::string& payload) {
  if (opts.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + opts.out);
  f << payload;
}

// JSON envelope: {"manifest": {...}, "data": ...} with the checksum taken
// over the serialized data section.
std::string with_manifest(const std::string& command, const ordered_json& params,
                          std::uint64_t seed, const ordered_json& data) {
  const std::string data_bytes = data.dump();
  ordered_json manifest;
  manifest["command"] = command;
  manifest["version"] = kVersion;
  manifest["seed"] = seed;
  manifest["parameters"] = params;
  manifest["output_checksum"] = hex64(fnv1a64(data_bytes));
  ordered_json root;
  root["manifest"] = manifest;
  root["data"] = data;
  return root.dump(2) + "\n";
}

std::string csv_manifest_line(const std::string& command, const ordered_json& params,
                              std::uint64_t seed, const std::string& body) {
  std::string line = "# command=" + command + " version=" + kVersion +
                     " seed=" + std::to_string(seed);
  for (const auto& [key, value] : params.items())
    line += " " + key + "=" + (value.is_string() ? value.get<std::string>()
                                                 : value.dump());
  line += " checksum=" + hex64(fnv1a64(body));
  return line + "\n" + body;
}

PatternKind parse_kind(const std::string& kind) {
  if (kind == "U2D") return PatternKind::U2D;
  if (kind == "U3D") return PatternKind::U3D;
  throw std::invalid_argument("--kind must be U2D or U3D");
}

// "132" -> the permutation 1 3 2.
Permutation parse_tau(const std::string& digits) {
  std::vector<int> v;
  for (char c : digits) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("pattern must be given as digits, e.g. 132");
    v.push_back(c - '0');
  }
  return Permutation(std::move(v));
}

// ---------------------------------------------------------------------------
// expectation

int run_expectation(const CommonOpts& opts, const std::string& kind_name,
                    int n_max, int precision) {
  const PatternKind kind = parse_kind(kind_name);
  const auto table = kind == PatternKind::U2D ? totals_u2d(n_max) : totals_u3d(n_max);
  const bool u3d = kind == PatternKind::U3D;

  ordered_json params{{"kind", kind_name}, {"n-max", n_max}, {"precision", precision}};

  if (opts.format == "csv") {
    std::ostringstream body;
    body << "n,alpha,beta" << (u3d ? ",gtilde" : "")
         << ",catalan,expected_blocks,length_lo,length_hi,length_exact\n";
    for (int n = 0; n <= n_max; ++n) {
      const auto bounds = expected_length_bounds(table, n);
      body << n << ',' << table.alpha[static_cast<size_t>(n)].get_str() << ','
           << table.beta[static_cast<size_t>(n)].get_str();
      if (u3d) body << ',' << table.gtilde[static_cast<size_t>(n)].get_str();
      body << ',' << table.catalan.at(n).get_str() << ','
           << decimal_string(expected_blocks(table, n), precision) << ','
           << decimal_string(bounds.lo, precision) << ','
           << decimal_string(bounds.hi, precision) << ','
           << (bounds.exact ? decimal_string(*bounds.exact, precision) : "")
           << '\n';
    }
    write_output(opts, csv_manifest_line("expectation", params, opts.seed, body.str()));
    return 0;
  }

  ordered_json rows = ordered_json::array();
  for (int n = 0; n <= n_max; ++n) {
    const auto bounds = expected_length_bounds(table, n);
    ordered_json row;
    row["n"] = n;
    row["alpha"] = table.alpha[static_cast<size_t>(n)].get_str();
    row["beta"] = table.beta[static_cast<size_t>(n)].get_str();
    if (u3d) row["gtilde"] = table.gtilde[static_cast<size_t>(n)].get_str();
    row["catalan"] = table.catalan.at(n).get_str();
    row["expected_blocks"] = rational_string(expected_blocks(table, n));
    row["expected_blocks_decimal"] = decimal_string(expected_blocks(table, n), precision);
    row["length_lo"] = rational_string(bounds.lo);
    row["length_hi"] = rational_string(bounds.hi);
    if (bounds.exact) row["length_exact"] = rational_string(*bounds.exact);
    rows.push_back(std::move(row));
  }
  ordered_json data{{"kind", kind_name}, {"rows", rows}};
  write_output(opts, with_manifest("expectation", params, opts.seed, data));
  return 0;
}

// ---------------------------------------------------------------------------
// series

int run_series(const CommonOpts& opts, const std::string& which, int order,
               const std::string& route_name, const std::string& mode) {
  ordered_json params{{"which", which}, {"order", order}, {"route", route_name},
                      {"mode", mode}};
  const SeriesRoute route = route_name == "compositional"
                                ? SeriesRoute::Compositional
                                : SeriesRoute::Closed;

  if (mode == "scaled") {
    if (which != "B" && which != "G")
      throw std::invalid_argument("scaled mode supports the B and G series");
    if (route == SeriesRoute::Compositional)
      throw std::invalid_argument("scaled mode evaluates the closed route only");
    const auto s = which == "B" ? series_b_u2d_scaled(order) : series_g_u3d_scaled(order);
    if (opts.format == "csv") {
      std::ostringstream body;
      body << "n,coeff_scaled\n";
      for (int n = 0; n <= order; ++n) body << n << ',' << s.coeff(n) << '\n';
      write_output(opts, csv_manifest_line("series", params, opts.seed, body.str()));
      return 0;
    }
    ordered_json coeffs = ordered_json::array();
    for (int n = 0; n <= order; ++n) coeffs.push_back(s.coeff(n));
    ordered_json data{{"which", which},
                      {"scaling", "entry n stores coeff(n) / 4^n"},
                      {"coefficients", coeffs}};
    write_output(opts, with_manifest("series", params, opts.seed, data));
    return 0;
  }

  RationalSeries s(0);
  if (which == "B")
    s = series_b_u2d(order, route);
  else if (which == "G")
    s = series_g_u3d(order, route);
  else if (which == "catalan")
    s = catalan_series(order);
  else if (which == "K")
    s = k_generating_series(order);
  else
    throw std::invalid_argument("--which must be one of B, G, catalan, K");

  if (opts.format == "csv") {
    std::ostringstream body;
    body << "n,numerator,denominator\n";
    for (int n = 0; n <= order; ++n)
      body << n << ',' << s.coeff(n).get_num().get_str() << ','
           << s.coeff(n).get_den().get_str() << '\n';
    write_output(opts, csv_manifest_line("series", params, opts.seed, body.str()));
    return 0;
  }
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= order; ++n) {
    ordered_json c;
    c["n"] = n;
    c["numerator"] = s.coeff(n).get_num().get_str();
    c["denominator"] = s.coeff(n).get_den().get_str();
    coeffs.push_back(std::move(c));
  }
  ordered_json data{{"which", which}, {"coefficients", coeffs}};
  write_output(opts, with_manifest("series", params, opts.seed, data));
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate

int run_enumerate(const CommonOpts& opts, int n, const std::string& avoid) {
  ordered_json params{{"n", n}, {"avoid", avoid}};
  const auto stream = [&](const std::function<void(const Permutation&)>& visit) {
    if (avoid == "none")
      enumerate_permutations(n, visit);
    else
      enumerate_avoiders(n, parse_tau(avoid), visit);
  };

  if (opts.format == "text" || opts.format == "csv") {
    // Streamed: avoiders at n = 14 run to the millions.
    std::ostringstream body;
    if (opts.format == "csv") body << "permutation\n";
    stream([&](const Permutation& sigma) { body << sigma.str() << '\n'; });
    write_output(opts, opts.format == "text"
                           ? body.str()
                           : csv_manifest_line("enumerate", params, opts.seed,
                                               body.str()));
    return 0;
  }
  ordered_json list = ordered_json::array();
  std::uint64_t count = 0;
  stream([&](const Permutation& sigma) {
    ++count;
    list.push_back(sigma.values());
  });
  ordered_json data{{"count", count}, {"permutations", list}};
  write_output(opts, with_manifest("enumerate", params, opts.seed, data));
  return 0;
}

// ---------------------------------------------------------------------------
// sample

int run_sample(const CommonOpts& opts, const std::string& avoid, int n, int reps,
               const std::string& pattern_text) {
  if (avoid != "132" && avoid != "none")
    throw std::invalid_argument("--avoid must be 132 or none");
  ordered_json params{{"avoid", avoid}, {"n", n}, {"reps", reps},
                      {"pattern", pattern_text}};

  const auto draw = [&](std::uint64_t stream) {
    CounterRng rng(opts.seed, stream);
    return avoid == "132" ? sample_avoider_132(n, rng) : sample_uniform(n, rng);
  };

  if (pattern_text.empty()) {
    // No statistic requested: emit the sampled permutations themselves.
    std::ostringstream body;
    if (opts.format == "csv") body << "permutation\n";
    for (int rep = 0; rep < reps; ++rep)
      body << draw(static_cast<std::uint64_t>(rep)).str() << '\n';
    if (opts.format == "text") {
      write_output(opts, body.str());
    } else if (opts.format == "csv") {
      write_output(opts, csv_manifest_line("sample", params, opts.seed, body.str()));
    } else {
      ordered_json data{{"permutations_text", body.str()}};
      write_output(opts, with_manifest("sample", params, opts.seed, data));
    }
    return 0;
  }

  const auto pattern = UpDownPattern::parse(pattern_text);
  std::vector<int> offsets;
  for (int r = 1; r < pattern.size(); ++r) offsets.push_back(r);
  std::vector<double> ratio(static_cast<size_t>(reps));
  std::vector<PhaseStats> stats(static_cast<size_t>(reps));
  for_blocks(0, reps, 1, [&](std::int64_t lo, std::int64_t, std::size_t) {
    const auto sigma = draw(static_cast<std::uint64_t>(lo));
    const auto s = statistics(sigma, pattern, offsets);
    ratio[static_cast<size_t>(lo)] =
        n == 0 ? 0.0 : static_cast<double>(s.length) / static_cast<double>(n);
    stats[static_cast<size_t>(lo)] = s;
  });
  const auto summary = summarize(ratio);

  ordered_json per_rep = ordered_json::array();
  for (int rep = 0; rep < reps; ++rep)
    per_rep.push_back(ordered_json{
        {"rep", rep},
        {"stream", rep},
        {"L_over_n", ratio[static_cast<size_t>(rep)]},
        {"stats", ordered_json::parse(phase_stats_json(stats[static_cast<size_t>(rep)]))}});
  ordered_json data{{"avoid", avoid},
                    {"n", n},
                    {"reps", reps},
                    {"pattern", pattern_text},
                    {"mean_L_over_n", summary.mean},
                    {"stddev", summary.stddev},
                    {"std_error", summary.std_error},
                    {"per_rep", per_rep}};
  if (opts.format == "csv") {
    std::ostringstream body;
    body << "rep,stream,L_over_n\n";
    for (int rep = 0; rep < reps; ++rep)
      body << rep << ',' << rep << ',' << ratio[static_cast<size_t>(rep)] << '\n';
    write_output(opts, csv_manifest_line("sample", params, opts.seed, body.str()));
    return 0;
  }
  write_output(opts, with_manifest("sample", params, opts.seed, data));
  return 0;
}

// ---------------------------------------------------------------------------
// biject

int run_biject(const CommonOpts& opts, const std::string& to,
               const std::string& op, const std::string& input) {
  if (to.empty() == op.empty())
    throw std::invalid_argument("biject needs exactly one of --to or --op");
  const auto sigma = Permutation::parse(input);
  Permutation image;
  if (!to.empty()) {
    if (to != "123") throw std::invalid_argument("--to supports 123");
    image = to_123_avoider(sigma);
  } else if (op == "rev") {
    image = reverse(sigma);
  } else if (op == "com") {
    image = complement(sigma);
  } else if (op == "rev-com") {
    image = reverse(complement(sigma));
  } else {
    throw std::invalid_argument("--op must be rev, com, or rev-com");
  }

  ordered_json params{{"to", to}, {"op", op}, {"input", input}};
  if (opts.format == "text") {
    write_output(opts, image.str() + "\n");
    return 0;
  }
  if (opts.format == "csv") {
    const std::string body = "input,output\n\"" + sigma.str() + "\",\"" +
                             image.str() + "\"\n";
    write_output(opts, csv_manifest_line("biject", params, opts.seed, body));
    return 0;
  }
  ordered_json data{{"input", sigma.values()}, {"output", image.values()},
                    {"output_text", image.str()}};
  write_output(opts, with_manifest("biject", params, opts.seed, data));
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const CommonOpts& opts, const std::string& suite, int n_max,
               int order) {
  std::vector<SuiteReport> reports;
  if (suite == "all")
    reports = verify_all(n_max, opts.seed, order);
  else if (suite == "permcore")
    reports = {verify_permcore(n_max)};
  else if (suite == "updown")
    reports = {verify_updown(n_max, opts.seed)};
  else if (suite == "catalan")
    reports = {verify_catalan(n_max, opts.seed)};
  else if (suite == "bijections")
    reports = {verify_bijections(n_max)};
  else if (suite == "totals")
    reports = {verify_totals(n_max)};
  else if (suite == "series")
    reports = {verify_series(order)};
  else
    throw std::invalid_argument("unknown suite: " + suite);

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();

  ordered_json params{{"suite", suite}, {"n-max", n_max}, {"order", order}};
  if (opts.format == "text") {
    std::ostringstream body;
    for (const auto& r : reports)
      for (const auto& c : r.checks) {
        body << (c.pass ? "[ok]   " : "[FAIL] ") << r.suite << ": " << c.name;
        if (!c.detail.empty()) body << " (" << c.detail << ")";
        body << '\n';
      }
    body << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    write_output(opts, body.str());
  } else {
    ordered_json suites = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : r.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass},
                                      {"detail", c.detail}});
      suites.push_back(ordered_json{{"suite", r.suite}, {"pass", r.pass()},
                                    {"checks", checks}});
    }
    ordered_json data{{"pass", all_pass}, {"suites", suites}};
    write_output(opts, with_manifest("verify", params, opts.seed, data));
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repeated up/down pattern statistics on pattern-avoiding permutations"};
  app.require_subcommand(1);

  CommonOpts expectation_opts, series_opts, enumerate_opts, sample_opts,
      biject_opts, verify_opts;

  // expectation
  auto* expectation = app.add_subcommand(
      "expectation", "Exact expected block counts and length brackets");
  std::string kind = "U2D";
  int exp_n_max = 2048;
  int precision = 12;
  expectation->add_option("--kind", kind, "Pattern family: U2D or U3D")
      ->check(CLI::IsMember({"U2D", "U3D"}));
  expectation->add_option("--n-max", exp_n_max, "Largest n in the table");
  expectation->add_option("--precision", precision, "Decimal digits in CSV output");
  add_common(expectation, expectation_opts, {"json", "csv"});

  // series
  auto* series = app.add_subcommand("series", "Generating function coefficients");
  std::string which = "B", route = "closed", mode = "exact";
  int order = 64;
  series->add_option("--which", which, "Series: B, G, catalan, or K")
      ->check(CLI::IsMember({"B", "G", "catalan", "K"}));
  series->add_option("--order", order, "Truncation order");
  series->add_option("--route", route, "Evaluation route")
      ->check(CLI::IsMember({"closed", "compositional"}));
  series->add_option("--mode", mode, "Coefficient mode")
      ->check(CLI::IsMember({"exact", "scaled"}));
  add_common(series, series_opts, {"json", "csv"});

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream pattern avoiders");
  int enum_n = 6;
  std::string avoid = "132";
  enumerate->add_option("--n", enum_n, "Permutation length");
  enumerate->add_option("--avoid", avoid,
                        "Length-3 pattern to avoid (e.g. 132), or none");
  add_common(enumerate, enumerate_opts, {"json", "csv", "text"});

  // sample
  auto* sample = app.add_subcommand("sample", "Random permutations and Monte Carlo");
  int sample_n = 1000, reps = 1;
  std::string sample_avoid = "132", sample_pattern;
  sample->add_option("--avoid", sample_avoid, "132 for exact avoider sampling, none for uniform");
  sample->add_option("--n", sample_n, "Permutation length");
  sample->add_option("--reps", reps, "Number of samples");
  sample->add_option("--pattern", sample_pattern,
                     "Up/down pattern; when set, reports mean L/n over reps");
  add_common(sample, sample_opts, {"json", "csv", "text"});

  // biject
  auto* biject = app.add_subcommand("biject", "Bijections and symmetries");
  std::string to, op, input;
  biject->add_option("--to", to, "Target class: 123");
  biject->add_option("--op", op, "Symmetry: rev, com, rev-com");
  biject->add_option("--input", input, "Permutation, whitespace-separated");
  add_common(biject, biject_opts, {"json", "csv", "text"});

  // verify
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  std::string suite = "all";
  int verify_n_max = 8, verify_order = 200;
  verify->add_option("--suite", suite,
                     "all, permcore, updown, catalan, bijections, totals, series");
  verify->add_option("--n-max", verify_n_max, "Exhaustive-check size cap");
  verify->add_option("--order", verify_order, "Series suite truncation order");
  add_common(verify, verify_opts, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expectation->parsed())
      return run_expectation(expectation_opts, kind, exp_n_max, precision);
    if (series->parsed())
      return run_series(series_opts, which, order, route, mode);
    if (enumerate->parsed())
      return run_enumerate(enumerate_opts, enum_n, avoid);
    if (sample->parsed())
      return run_sample(sample_opts, sample_avoid, sample_n, reps, sample_pattern);
    if (biject->parsed())
      return run_biject(biject_opts, to, op, input);
    if (verify->parsed())
      return run_verify(verify_opts, suite, verify_n_max, verify_order);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
