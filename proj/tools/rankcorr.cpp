// rankcorr: weighted rank correlation, standardization and parameter tables.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankcorr.hpp"

namespace {

using namespace rankcorr;
using nlohmann::json;

enum Exit { kOk = 0, kInputError = 2, kNumericError = 3, kExtrapolationRefused = 4 };

struct ExitRequest {
  int code;
  std::string message;
};

struct ConfigFlags {
  std::string coefficient = "spearman";
  std::string weighting = "none";
  std::string f = "harmonic";

  CoefficientConfig resolve() const {
    // a full name like kendall/additive/iq1 overrides the other two flags
    if (coefficient.find('/') != std::string::npos) return parse_coefficient_config(coefficient);
    const auto kind = parse_coefficient_kind(coefficient);
    if (weighting == "none") return {kind, std::nullopt};
    return CoefficientConfig::weighted(kind, parse_weight_function(f), parse_weight_scheme(weighting));
  }
};

struct Common {
  ConfigFlags config;
  std::string table_path;
  unsigned threads = 0;
  bool json = false;
  bool strict = false;
};

void add_config_flags(CLI::App* cmd, ConfigFlags& c) {
  cmd->add_option("--coefficient", c.coefficient, "spearman, kendall, or a full name such as kendall/additive/iq1")
      ->capture_default_str();
  cmd->add_option("--weighting", c.weighting, "none, additive or multiplicative")
      ->check(CLI::IsMember({"none", "additive", "multiplicative"}))
      ->capture_default_str();
  cmd->add_option("--f", c.f, "weight function: harmonic, iq0, iq1, iq2")->capture_default_str();
}

void add_common_flags(CLI::App* cmd, Common& c) {
  add_config_flags(cmd, c.config);
  cmd->add_option("--table", c.table_path, "parameter table file (default: bundled)");
  cmd->add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
  cmd->add_flag("--json", c.json, "machine readable output");
  cmd->add_flag("--strict", c.strict, "refuse parameters extrapolated past the fitted range");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::ParseError, "cannot write " + path);
}

ParameterTable load_table_arg(const std::string& path) {
  if (path.empty()) return bundled_table();
  return load_table(read_file(path));
}

TiePolicy parse_ties(const std::string& s) {
  if (s == "reject") return TiePolicy::Reject;
  if (s == "input-order") return TiePolicy::BreakByInputOrder;
  throw Error(ErrorCode::ParseError, "ties policy '" + s + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// A ranking file holds one number per item, whitespace separated. By default
// the numbers are rank positions (smaller is better); with --scores they are
// scores (larger is better). Position lists that are not a permutation of
// 1..n or 0..n-1 are re-ranked under the ties policy.
Permutation read_ranking(const std::string& path, bool scores, TiePolicy ties) {
  std::istringstream in(read_file(path));
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    double v = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size() || !std::isfinite(v))
      throw Error(ErrorCode::ParseError, path + ": '" + token + "' is not a number");
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorCode::EmptyInput, path + ": no values");
  if (scores) return rank_from_scores(values, true, ties);
  std::vector<long long> ints;
  for (double v : values) {
    if (v != std::floor(v)) return rank_from_scores(values, false, ties);
    ints.push_back(static_cast<long long>(v));
  }
  try {
    return validate_ranking(ints);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DuplicateValue && e.code() != ErrorCode::OutOfRangeValue) throw;
    if (e.code() == ErrorCode::DuplicateValue && ties == TiePolicy::Reject)
      throw Error(ErrorCode::TiesPresent, path + ": " + e.what());
    return rank_from_scores(values, false, ties);
  }
}

void check_strict(const Common& c, const ParameterLookup& lookup) {
  if (c.strict && lookup.provenance == Provenance::Extrapolated)
    throw ExitRequest{kExtrapolationRefused, "parameters would be extrapolated past the fitted range"};
}

json params_json(const DistributionParams& p) {
  return {{"gamma_bar", p.gamma_bar}, {"variance", p.variance}, {"left_variance", p.left_variance}};
}

json standardizer_json(const Standardizer& g) {
  return {{"gamma_bar", g.gamma_bar}, {"g0", g.g0}, {"g1", g.g1}, {"g2", g.g2}, {"h2", g.h2}};
}

void warn_params(const ParameterLookup& lookup) {
  for (const auto& w : lookup.params.warnings()) std::cerr << "warning: " << w << "\n";
  if (lookup.provenance == Provenance::Extrapolated)
    std::cerr << "warning: parameters extrapolated past the fitted range\n";
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  Common common;
  std::string file_a, file_b;
  bool standardize = false;
  bool scores = false;
  std::string ties = "reject";
};

void run_compute(const ComputeArgs& args) {
  const auto config = args.common.config.resolve();
  const auto ties = parse_ties(args.ties);
  const auto a = read_ranking(args.file_a, args.scores, ties);
  const auto b = read_ranking(args.file_b, args.scores, ties);
  const double raw = evaluate(config, a, b);
  json out = {{"coefficient", to_string(config)}, {"n", a.size()}, {"raw", raw}};
  if (args.standardize) {
    const auto table = load_table_arg(args.common.table_path);
    const auto resolved = resolve_standardizer(table, config, a.size());
    check_strict(args.common, resolved.lookup);
    warn_params(resolved.lookup);
    out["standardized"] = resolved.g(raw);
    out["provenance"] = to_string(resolved.lookup.provenance);
    out["params"] = params_json(resolved.lookup.params);
  }
  if (args.common.json) {
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "coefficient   " << to_string(config) << "\n"
            << "n             " << a.size() << "\n"
            << "raw           " << fmt(raw) << "\n";
  if (args.standardize)
    std::cout << "standardized  " << fmt(out["standardized"].get<double>()) << "\n"
              << "provenance    " << out["provenance"].get<std::string>() << "\n";
}

// ---------------------------------------------------------------------------

struct EstimateArgs {
  Common common;
  bool all = false;
  int a_min = 9;
  int a_max = 30;
  double q = 1.3;
  std::uint64_t seed = 0;
  bool no_anchor = false;
  std::string out;
};

void run_estimate(const EstimateArgs& args) {
  std::vector<CoefficientConfig> configs;
  if (args.all)
    configs = published_weighted_configs();
  else
    configs.push_back(args.common.config.resolve());
  TrainingSettings settings;
  settings.q = args.q;
  settings.a_min = args.a_min;
  settings.a_max = args.a_max;
  settings.seed = args.seed;
  settings.threads = args.common.threads;
  settings.anchor_exact = !args.no_anchor;
  settings.log = &std::cerr;
  ParameterTable table;
  for (const auto& config : configs) {
    const auto report = build_parameter_models_report(config, settings);
    std::cerr << to_string(config) << ": degrees gamma=" << report.degree_gamma
              << " variance=" << report.degree_variance
              << " left_variance=" << report.degree_left_variance << "\n";
    table.entries.push_back(report.entry);
  }
  write_output(args.out, serialize_table(table));
}

// ---------------------------------------------------------------------------

struct DistributionArgs {
  Common common;
  std::uint64_t n = 0;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  bool standardize = false;
  std::size_t bins = 50;
  std::string out;
};

void run_distribution(const DistributionArgs& args) {
  const auto config = args.common.config.resolve();
  if (args.n < 3) throw Error(ErrorCode::InvalidLength, "--n must be at least 3");
  if (args.samples < 2) throw Error(ErrorCode::DegenerateLength, "--samples must be at least 2");
  const auto table = load_table_arg(args.common.table_path);
  const auto resolved = resolve_standardizer(table, config, args.n);
  if (args.standardize) check_strict(args.common, resolved.lookup);
  warn_params(resolved.lookup);
  auto values = sample_coefficients(config, args.n, args.samples, args.seed, args.common.threads);
  if (args.standardize)
    for (double& v : values) v = resolved.g(v);
  const auto h = make_histogram(values, args.standardize ? "standardized" : "raw", args.bins);
  const double se = h.sd / std::sqrt(static_cast<double>(h.n_samp));
  json doc = {{"label", h.label},
              {"coefficient", to_string(config)},
              {"n", args.n},
              {"n_samp", h.n_samp},
              {"seed", args.seed},
              {"mean", h.mean},
              {"sd", h.sd},
              {"standard_error", se},
              {"bandwidth", h.bandwidth},
              {"edges", h.edges},
              {"densities", h.densities},
              {"kde", {{"x", h.kde_x}, {"y", h.kde_y}}},
              {"provenance", to_string(resolved.lookup.provenance)},
              {"params", params_json(resolved.lookup.params)},
              {"standardizer", standardizer_json(resolved.g)}};
  if (args.out.empty() || args.out == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  write_output(args.out, doc.dump(2) + "\n");
  if (args.common.json) {
    for (const char* key : {"edges", "densities", "kde"}) doc.erase(key);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "coefficient   " << to_string(config) << " (" << h.label << ")\n"
            << "n             " << args.n << "\n"
            << "samples       " << h.n_samp << "\n"
            << "mean          " << fmt(h.mean) << " +- " << fmt(se) << "\n"
            << "sd            " << fmt(h.sd) << "\n"
            << "bandwidth     " << fmt(h.bandwidth) << "\n"
            << "model mean    " << fmt(resolved.lookup.params.gamma_bar) << " ("
            << to_string(resolved.lookup.provenance) << ")\n";
}

// ---------------------------------------------------------------------------

struct RecsysArgs {
  Common common;
  std::string ratings;
  std::string split_date = "1998-03-08";
  std::vector<std::string> coefficients = {"all"};
  bool standardize = false;
  std::uint64_t seed = 0;
  std::string ties = "input-order";
};

std::vector<CoefficientConfig> parse_coefficient_list(const std::vector<std::string>& names) {
  std::vector<CoefficientConfig> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.push_back(CoefficientConfig::spearman());
      out.push_back(CoefficientConfig::kendall());
      for (const auto& c : published_weighted_configs()) out.push_back(c);
    } else {
      out.push_back(parse_coefficient_config(name));
    }
  }
  return out;
}

void run_recsys(const RecsysArgs& args) {
  std::ifstream in(args.ratings);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + args.ratings);
  const auto records = recsys::parse_ratings(in);
  const auto comparison =
      recsys::build_comparison(records, recsys::parse_date(args.split_date), parse_ties(args.ties));
  const auto table = load_table_arg(args.common.table_path);
  const auto configs = parse_coefficient_list(args.coefficients);
  std::vector<recsys::ScoreCard> cards;
  for (const auto& config : configs) {
    cards.push_back(recsys::score(comparison, config, table, args.seed));
    if (args.standardize && args.common.strict && cards.back().provenance == Provenance::Extrapolated)
      throw ExitRequest{kExtrapolationRefused, to_string(config) + ": parameters extrapolated"};
  }
  if (args.common.json) {
    json doc = {{"items", comparison.items.size()},
                {"ratings_a", comparison.ratings_a},
                {"ratings_b", comparison.ratings_b},
                {"seed", args.seed}};
    json rows = json::array();
    for (const auto& card : cards) {
      json r = {{"coefficient", to_string(card.config)}, {"provenance", to_string(card.provenance)}};
      for (const auto& row : card.rows) {
        r["raw"][row.name] = row.raw;
        if (args.standardize) r["standardized"][row.name] = row.standardized;
      }
      rows.push_back(r);
    }
    doc["coefficients"] = rows;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::printf("items in both subsets: %zu (A: %zu ratings, B: %zu ratings)\n\n",
              comparison.items.size(), comparison.ratings_a, comparison.ratings_b);
  std::printf("%-34s", "coefficient");
  for (const auto& row : cards.front().rows) std::printf(" %14s", row.name.c_str());
  std::printf("\n");
  for (const auto& card : cards) {
    std::printf("%-34s", to_string(card.config).c_str());
    for (const auto& row : card.rows) std::printf(" %13.1f%%", 100.0 * row.raw);
    std::printf("\n");
    if (args.standardize && card.config.is_weighted()) {
      std::printf("%-34s", ("  standardized (" + to_string(card.provenance) + ")").c_str());
      for (const auto& row : card.rows) std::printf(" %13.1f%%", 100.0 * row.standardized);
      std::printf("\n");
    }
  }
}

// ---------------------------------------------------------------------------

struct ParamsArgs {
  Common common;
  std::uint64_t n = 0;
};

void run_params(const ParamsArgs& args) {
  const auto config = args.common.config.resolve();
  const auto table = load_table_arg(args.common.table_path);
  const auto resolved = resolve_standardizer(table, config, args.n);
  check_strict(args.common, resolved.lookup);
  warn_params(resolved.lookup);
  json doc = {{"coefficient", to_string(config)},
              {"n", args.n},
              {"provenance", to_string(resolved.lookup.provenance)},
              {"params", params_json(resolved.lookup.params)},
              {"standardizer", standardizer_json(resolved.g)}};
  if (args.common.json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const auto& p = resolved.lookup.params;
  const auto& g = resolved.g;
  std::cout << "coefficient   " << to_string(config) << "\n"
            << "n             " << args.n << " (" << to_string(resolved.lookup.provenance) << ")\n"
            << "gamma_bar     " << fmt(p.gamma_bar) << "\n"
            << "variance      " << fmt(p.variance) << "\n"
            << "left_variance " << fmt(p.left_variance) << "\n"
            << "g0 g1         " << fmt(g.g0) << " " << fmt(g.g1) << "\n"
            << "g2 h2         " << fmt(g.g2) << " " << fmt(g.h2) << "\n";
}

struct TableArgs {
  std::string in;
  std::string out;
};

void run_table(const TableArgs& args) {
  const auto table = args.in.empty() ? bundled_table() : load_table(read_file(args.in));
  write_output(args.out, serialize_table(table));
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundConsistency:
    case ErrorCode::InfeasibleFlatBound:
    case ErrorCode::FlatDenominator:
    case ErrorCode::RankDeficient:
      return kNumericError;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted rank correlation coefficients and their standardization"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "correlation between two ranking files");
  add_common_flags(c, compute.common);
  c->add_option("ranking_a", compute.file_a, "first ranking file")->required();
  c->add_option("ranking_b", compute.file_b, "second ranking file")->required();
  c->add_flag("--standardize", compute.standardize, "also print g(raw)");
  c->add_flag("--scores", compute.scores, "files hold scores, larger ranks first");
  c->add_option("--ties", compute.ties, "reject or input-order")
      ->check(CLI::IsMember({"reject", "input-order"}))
      ->capture_default_str();

  EstimateArgs estimate;
  auto* e = app.add_subcommand("estimate", "enumerate, sample and fit a parameter table");
  add_common_flags(e, estimate.common);
  e->add_flag("--all", estimate.all, "all sixteen published weighted configurations");
  e->add_option("--a-min", estimate.a_min, "smallest training exponent")->capture_default_str();
  e->add_option("--a-max", estimate.a_max, "largest training exponent")->capture_default_str();
  e->add_option("--q", estimate.q, "training length base")->capture_default_str();
  e->add_option("--seed", estimate.seed)->capture_default_str();
  e->add_flag("--no-anchor", estimate.no_anchor, "fit the mean on sampled lengths only");
  e->add_option("--out", estimate.out, "output table file (default stdout)");

  DistributionArgs dist;
  auto* d = app.add_subcommand("distribution", "sample the coefficient and emit histogram + KDE");
  add_common_flags(d, dist.common);
  d->add_option("--n", dist.n, "ranking length")->required();
  d->add_option("--samples", dist.samples, "number of sampled permutations")->capture_default_str();
  d->add_option("--seed", dist.seed)->capture_default_str();
  d->add_flag("--standardize", dist.standardize, "map samples through g");
  d->add_option("--bins", dist.bins)->capture_default_str()->check(CLI::PositiveNumber);
  d->add_option("--out", dist.out, "histogram JSON file (default stdout)");

  RecsysArgs rec;
  auto* r = app.add_subcommand("recsys-eval", "compare rankings built from a ratings file");
  add_common_flags(r, rec.common);
  r->add_option("ratings", rec.ratings, "u.data style ratings file")->required();
  r->add_option("--split-date", rec.split_date, "first day of subset B, UTC")->capture_default_str();
  r->add_option("--coefficients", rec.coefficients, "configs such as kendall/additive/harmonic, or all")
      ->delimiter(',')
      ->capture_default_str();
  r->add_flag("--standardize", rec.standardize, "also print standardized values");
  r->add_option("--seed", rec.seed, "seed of the random baseline")->capture_default_str();
  r->add_option("--ties", rec.ties, "reject or input-order")
      ->check(CLI::IsMember({"reject", "input-order"}))
      ->capture_default_str();

  ParamsArgs params;
  auto* p = app.add_subcommand("params", "distribution parameters and g(x) for a length");
  add_common_flags(p, params.common);
  p->add_option("--n", params.n, "ranking length")->required();

  TableArgs table;
  auto* t = app.add_subcommand("table", "validate a table file and print it in canonical form");
  t->add_option("--in", table.in, "table file (default: bundled)");
  t->add_option("--out", table.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*c) run_compute(compute);
    if (*e) run_estimate(estimate);
    if (*d) run_distribution(dist);
    if (*r) run_recsys(rec);
    if (*p) run_params(params);
    if (*t) run_table(table);
  } catch (const ExitRequest& req) {
    std::cerr << "error: " << req.message << "\n";
    return req.code;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  }
  return kOk;
}
