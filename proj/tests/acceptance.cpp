// Acceptance runner: one PASS/FAIL/SKIP line per criterion.
//   acceptance [--extended] [--only k] [--movielens path/to/u.data]
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "rankcorr.hpp"

using namespace rankcorr;
using nlohmann::json;

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Verdict {
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

struct Options {
  bool extended = false;
  int only = 0;
  std::string movielens;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Fresh enumeration results, shared between criteria.
const DistributionParams& fresh_params(const CoefficientConfig& c, std::uint64_t n) {
  static std::map<std::pair<std::string, std::uint64_t>, DistributionParams> cache;
  const auto key = std::make_pair(to_string(c), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, exact_distribution_params(c, n)).first;
  return it->second;
}

std::string run_cli(const std::string& args, int* code) {
  const std::string cmd = std::string("'") + RANKCORR_CLI + "' " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    *code = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::vector<CoefficientConfig> weighted_kendall_configs() {
  std::vector<CoefficientConfig> out;
  for (const auto& c : published_weighted_configs())
    if (c.kind == CoefficientKind::Kendall) out.push_back(c);
  return out;
}

Verdict criterion_1(const Options& o) {
  const std::uint64_t hi = o.extended ? 10 : 7;
  const std::uint64_t lo = o.extended ? 8 : 3;
  const double tol = 5e-7;
  int cells = 0, bad = 0, reported = 0;
  std::ostringstream notes;
  double worst = 0;
  for (const auto& e : bundled_table().entries) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const auto& fresh = fresh_params(e.config, n);
      const auto& printed = e.exact.at(n);
      const double diff[3] = {printed.gamma_bar - fresh.gamma_bar, printed.variance - fresh.variance,
                              printed.left_variance - fresh.left_variance};
      const char* names[3] = {"gamma_bar", "variance", "left_variance"};
      for (int k = 0; k < 3; ++k) {
        ++cells;
        if (std::abs(diff[k]) <= tol) {
          worst = std::max(worst, std::abs(diff[k]));
          continue;
        }
        // Known duplicated cells: report against the fresh value, do not count.
        if (e.errata.count(n)) {
          ++reported;
          notes << "\n    printed " << to_string(e.config) << " n=" << n << " " << names[k] << " = "
                << detail::format_number(k == 0 ? printed.gamma_bar : k == 1 ? printed.variance : printed.left_variance)
                << ", enumeration gives "
                << detail::format_number(k == 0 ? fresh.gamma_bar : k == 1 ? fresh.variance : fresh.left_variance);
          continue;
        }
        ++bad;
        notes << "\n    MISMATCH " << to_string(e.config) << " n=" << n << " " << names[k] << " off by "
              << fmt(diff[k]);
      }
    }
  }
  Verdict v;
  v.outcome = bad == 0 ? Outcome::Pass : Outcome::Fail;
  v.detail = "n=" + std::to_string(lo) + ".." + std::to_string(hi) + ", " + std::to_string(cells - reported - bad) +
             "/" + std::to_string(cells) + " cells within 5e-7 (worst " + fmt(worst) + "), " +
             std::to_string(reported) + " duplicated printed cells reported" + notes.str();
  return v;
}

Verdict criterion_2(const Options&) {
  double worst = 0;
  for (const auto& c : published_weighted_configs())
    for (std::uint64_t n = 3; n <= 7; ++n) {
      const auto g = build_standardizer(fresh_params(c, n));
      CompensatedSum s;
      const auto values = exact_coefficient_values(c, n);
      for (double x : values) s += g(x);
      worst = std::max(worst, std::abs(s.value() / static_cast<double>(values.size())));
    }
  return {worst <= 1e-10 ? Outcome::Pass : Outcome::Fail, "max |E g| over 16 configs, n=3..7: " + fmt(worst)};
}

// Returns an empty string when every property holds.
std::string check_standardizer(const DistributionParams& p) {
  Standardizer g;
  try {
    g = build_standardizer(p);
  } catch (const Error& e) {
    return e.what();
  }
  if (std::abs(g(-1.0) + 1.0) > 1e-12 || std::abs(g(1.0) - 1.0) > 1e-12) return "endpoints";
  if (g.g0 < -1.0 || g.g0 > 1.0) return "g0 outside [-1,1]";
  double prev = -2.0;
  for (int i = 0; i <= 2000; ++i) {
    const double v = g(-1.0 + i / 1000.0);
    if (v < prev - 1e-15) return "decreasing";
    prev = v;
  }
  const double below = std::nextafter(g.gamma_bar, -2.0);
  if (std::abs(g.value(below) - g.value(g.gamma_bar)) > 1e-12) return "value seam";
  if (std::abs(g.derivative(below) - g.derivative(g.gamma_bar)) > 1e-12) return "derivative seam";
  return {};
}

Verdict criterion_3(const Options& o) {
  const auto& t = bundled_table();
  int cases = 0;
  std::ostringstream failures;
  for (const auto& c : published_weighted_configs())
    for (std::uint64_t n = 3; n <= 10; ++n) {
      ++cases;
      const auto why = check_standardizer(lookup_params(t, c, n).params);
      if (!why.empty()) failures << "\n    table " << to_string(c) << " n=" << n << ": " << why;
    }
  const std::uint64_t fresh_hi = o.extended ? 10 : 8;
  int fresh_cases = 0;
  for (const auto& c : published_weighted_configs())
    for (std::uint64_t n = 3; n <= fresh_hi; ++n) {
      ++fresh_cases;
      const auto why = check_standardizer(fresh_params(c, n));
      if (!why.empty()) failures << "\n    exact " << to_string(c) << " n=" << n << ": " << why;
    }
  const auto text = failures.str();
  return {text.empty() ? Outcome::Pass : Outcome::Fail,
          std::to_string(cases) + " table cases and " + std::to_string(fresh_cases) + " exact cases (n=3.." +
              std::to_string(fresh_hi) + ")" + text};
}

Verdict criterion_4(const Options&) {
  const auto& t = bundled_table();
  double worst = 0;
  for (const auto& c : {CoefficientConfig::spearman(), CoefficientConfig::kendall()}) {
    for (std::uint64_t n : {2u, 3u, 7u, 10u, 11u, 500u, 100000u}) {
      const auto g = resolve_standardizer(t, c, n).g;
      for (int i = 0; i <= 2000; ++i) {
        const double x = -1.0 + i / 1000.0;
        worst = std::max(worst, std::abs(g(x) - x));
      }
    }
    // Standardizers built from enumerated unweighted moments.
    for (std::uint64_t n = 3; n <= 7; ++n) {
      const auto g = build_standardizer(fresh_params(c, n));
      for (int i = 0; i <= 2000; ++i) {
        const double x = -1.0 + i / 1000.0;
        worst = std::max(worst, std::abs(g(x) - x));
      }
    }
  }
  // CLI: raw and standardized printed values coincide.
  const std::string a = std::string(RANKCORR_TEST_DATA) + "/ranking_a.txt";
  const std::string b = std::string(RANKCORR_TEST_DATA) + "/ranking_b.txt";
  bool cli_ok = true;
  for (const char* c : {"spearman", "kendall"}) {
    int code = 0;
    const auto out = run_cli("compute " + a + " " + b + " --standardize --json --coefficient " + c, &code);
    if (code != 0) {
      cli_ok = false;
      continue;
    }
    const auto doc = json::parse(out);
    cli_ok = cli_ok && doc["raw"].get<double>() == doc["standardized"].get<double>();
  }
  const bool ok = worst <= 1e-12 && cli_ok;
  return {ok ? Outcome::Pass : Outcome::Fail,
          "max |g(x)-x| = " + fmt(worst) + ", CLI raw == standardized: " + (cli_ok ? "yes" : "no")};
}

Verdict criterion_5(const Options&) {
  const auto configs = weighted_kendall_configs();
  double worst_exhaustive = 0, worst_random = 0;
  const auto id5 = Permutation::identity(5);
  for (const auto& c : configs)
    for (const auto& p : enumerate_permutations(5)) {
      const auto& f = c.weighting->function;
      const auto s = c.weighting->scheme;
      worst_exhaustive = std::max(worst_exhaustive, std::abs(weighted_kendall_fast(id5, p, f, s) -
                                                              weighted_kendall_naive(id5, p, f, s)));
    }
  CounterRng rng(20240611);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 10 + rng.uniform_below(191);
    const auto& c = configs[rng.uniform_below(configs.size())];
    const auto a = sample_permutation(n, rng), b = sample_permutation(n, rng);
    const auto& f = c.weighting->function;
    const auto s = c.weighting->scheme;
    worst_random = std::max(worst_random, std::abs(weighted_kendall_fast(a, b, f, s) -
                                                   weighted_kendall_naive(a, b, f, s)));
  }
  double slowest_ms = 0;
  const std::size_t big = 10000;
  const auto a = sample_permutation(big, rng), b = sample_permutation(big, rng);
  for (const auto& c : configs) {
    volatile double sink = evaluate(c, a, b);  // warm-up
    const auto start = std::chrono::steady_clock::now();
    sink = evaluate(c, a, b);
    (void)sink;
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    slowest_ms = std::max(slowest_ms, ms.count());
  }
  const bool ok = worst_exhaustive <= 1e-12 && worst_random <= 1e-12 && slowest_ms < 100.0;
  return {ok ? Outcome::Pass : Outcome::Fail,
          "n=5 exhaustive max err " + fmt(worst_exhaustive) + ", random max err " + fmt(worst_random) +
              ", n=1e4 slowest call " + fmt(slowest_ms) + " ms"};
}

Verdict criterion_6(const Options&) {
  auto configs = published_weighted_configs();
  configs.push_back(CoefficientConfig::spearman());
  configs.push_back(CoefficientConfig::kendall());
  CounterRng rng(77);
  double worst = 0;
  for (const auto& c : configs)
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 2 + rng.uniform_below(199);
      const auto a = sample_permutation(n, rng), b = sample_permutation(n, rng);
      const double direct = evaluate(c, a, b);
      const double relative = evaluate(c, Permutation::identity(n), compose(b, invert(a)));
      worst = std::max(worst, std::abs(direct - relative));
    }
  return {worst <= 1e-12 ? Outcome::Pass : Outcome::Fail,
          std::to_string(configs.size()) + " configs x 500 pairs, max err " + fmt(worst)};
}

Verdict criterion_7(const Options&) {
  const std::uint64_t n = 9;
  int failures = 0, reseeded = 0;
  double worst_z = 0;
  std::ostringstream notes;
  for (const auto& c : published_weighted_configs()) {
    const double exact = fresh_params(c, n).gamma_bar;
    double z = 0;
    for (std::uint64_t seed : {11u, 12u}) {
      const auto s = mc_estimate(c, n, 100000, seed);
      z = std::abs(s.mean - exact) / std::sqrt(s.mean_variance);
      if (z <= 4.0) break;
      if (seed == 11u) ++reseeded;
    }
    worst_z = std::max(worst_z, z);
    if (z > 4.0) {
      ++failures;
      notes << "\n    " << to_string(c) << " off by " << fmt(z) << " SE after re-seed";
    }
  }
  return {failures == 0 ? Outcome::Pass : Outcome::Fail,
          "n=9, 1e5 samples, worst " + fmt(worst_z) + " SE, " + std::to_string(reseeded) + " re-seeded" +
              notes.str()};
}

Verdict criterion_8(const Options&) {
  std::vector<std::uint64_t> lengths;
  for (int a = 9; a <= 30; ++a) lengths.push_back(static_cast<std::uint64_t>(std::llround(std::pow(1.3, a))));
  const std::vector<double> truth{-0.1, 0.7, -2.5, 4.0};
  double worst_coef = 0;
  bool degree_ok = true;
  for (auto t : {LengthTransform::Inverse, LengthTransform::InverseLog}) {
    const RegressionModel gen{t, truth, std::nullopt};
    std::vector<FitPoint> pts;
    for (auto n : lengths) {
      const double x = transform_length(n, t);
      pts.push_back({x, gen.polynomial(x), 1.0});
    }
    const auto m = fit_polynomial(pts, 3, t);
    for (std::size_t d = 0; d < truth.size(); ++d) worst_coef = std::max(worst_coef, std::abs(m.coefficients[d] - truth[d]));
    degree_ok = degree_ok && select_degree(pts) == 3;
  }
  TrainingSettings s;
  s.a_max = 20;
  s.seed = 1;
  const auto c = CoefficientConfig::weighted(CoefficientKind::Kendall, WeightFunction::harmonic(), WeightScheme::Additive);
  const auto entry = build_parameter_models(c, s);
  double worst_pipe = 0;
  for (std::uint64_t n = 3; n <= 10; ++n)
    worst_pipe = std::max(worst_pipe, std::abs(evaluate_model(entry.model_gamma, n).value - fresh_params(c, n).gamma_bar));
  const bool ok = worst_coef <= 1e-8 && degree_ok && worst_pipe <= 1e-2;
  return {ok ? Outcome::Pass : Outcome::Fail,
          "cubic recovery err " + fmt(worst_coef) + ", degree selection " + (degree_ok ? "3" : "wrong") +
              ", a_max=20 pipeline max |error| " + fmt(worst_pipe)};
}

Verdict criterion_9(const Options&) {
  const std::string base = "distribution --coefficient spearman/additive/iq0 --n 500 --samples 10000 --seed 9";
  int code_std = 0, code_raw = 0;
  const auto std_out = run_cli(base + " --standardize", &code_std);
  const auto raw_out = run_cli(base, &code_raw);
  if (code_std != 0 || code_raw != 0) return {Outcome::Fail, "CLI exited with an error"};
  const auto sd = json::parse(std_out), rw = json::parse(raw_out);
  const double z_std = std::abs(sd["mean"].get<double>()) / sd["standard_error"].get<double>();
  const double predicted = rw["params"]["gamma_bar"];
  const double z_raw = std::abs(rw["mean"].get<double>() - predicted) / rw["standard_error"].get<double>();
  const bool ok = z_std <= 4.0 && z_raw <= 4.0;
  return {ok ? Outcome::Pass : Outcome::Fail,
          "standardized mean " + fmt(sd["mean"].get<double>()) + " (" + fmt(z_std) + " SE from 0), raw mean " +
              fmt(rw["mean"].get<double>()) + " vs model " + fmt(predicted) + " (" + fmt(z_raw) + " SE)"};
}

Verdict criterion_10(const Options& o) {
  if (o.movielens.empty() || !std::filesystem::exists(o.movielens))
    return {Outcome::Skip, "MovieLens u.data not supplied (--movielens or MOVIELENS_DATA)"};
  std::ifstream in(o.movielens);
  const auto comparison = recsys::build_comparison(recsys::parse_ratings(in), recsys::kDefaultSplit);
  const auto& table = bundled_table();
  std::ostringstream notes;
  bool ok = true;
  notes << comparison.items.size() << " items";
  for (const auto& c : {CoefficientConfig::spearman(), CoefficientConfig::kendall()}) {
    const double lf = recsys::score(comparison, c, table, 0).rows[3].raw;
    notes << "\n    " << to_string(c) << " last-first " << fmt(lf);
    ok = ok && lf > 0.99;
  }
  for (auto kind : {CoefficientKind::Spearman, CoefficientKind::Kendall})
    for (auto f : {WeightFunction::harmonic(), WeightFunction::inverse_quadratic(1)}) {
      const auto c = CoefficientConfig::weighted(kind, f, WeightScheme::Additive);
      const double lf = recsys::score(comparison, c, table, 0).rows[3].standardized;
      double baseline = 0;
      for (std::uint64_t seed = 0; seed < 20; ++seed)
        baseline += recsys::score(comparison, c, table, seed).rows[0].standardized / 20.0;
      notes << "\n    " << to_string(c) << " standardized last-first " << fmt(lf) << ", random baseline "
            << fmt(baseline);
      ok = ok && lf < 0.85 && std::abs(baseline) <= 0.05;
    }
  return {ok ? Outcome::Pass : Outcome::Fail, notes.str()};
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--extended") {
      o.extended = true;
    } else if (arg == "--only" && i + 1 < argc) {
      o.only = std::stoi(argv[++i]);
    } else if (arg == "--movielens" && i + 1 < argc) {
      o.movielens = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--extended] [--only k] [--movielens u.data]\n";
      return 2;
    }
  }
  const std::vector<std::function<Verdict(const Options&)>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  bool failed = false;
  for (std::size_t k = 1; k <= criteria.size(); ++k) {
    if (o.only != 0 && static_cast<std::size_t>(o.only) != k) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k - 1](o);
    } catch (const std::exception& e) {
      v = {Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    const char* word = v.outcome == Outcome::Pass ? "PASS" : v.outcome == Outcome::Fail ? "FAIL" : "SKIP";
    std::cout << "criterion " << k << ": " << word << "  " << v.detail << "  [" << fmt(secs.count()) << " s]"
              << std::endl;
    failed = failed || v.outcome == Outcome::Fail;
  }
  return failed ? 1 : 0;
}
