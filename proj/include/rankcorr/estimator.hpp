#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <vector>

#include "coefficients.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "random.hpp"
#include "regression.hpp"
#include "standardizer.hpp"
#include "table.hpp"

namespace rankcorr {

// ---------------------------------------------------------------------------
// Exact enumeration

/// Γ(identity, pi) for every pi of length n, in lexicographic index order.
/// The index space is cut into a fixed number of contiguous blocks so the
/// output does not depend on `threads`.
inline std::vector<double> exact_coefficient_values(const CoefficientConfig& config, std::size_t n,
                                                    unsigned threads = 0) {
  check_enumerable(n);
  if (n < 2) throw Error(ErrorCode::DegenerateLength, "correlation needs n >= 2");
  const std::uint64_t total = factorial(n);
  std::vector<double> values(static_cast<std::size_t>(total));
  const std::size_t blocks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t per_block = (total + blocks - 1) / blocks;
  const auto identity = Permutation::identity(n);
  parallel_blocks(blocks, threads, [&](std::size_t block) {
    Evaluator ev(config, n);
    const std::uint64_t first = block * per_block;
    for_each_permutation(n, first, first + per_block, [&](auto image, std::uint64_t index) {
      values[static_cast<std::size_t>(index)] = ev(identity.image(), image);
    });
  });
  return values;
}

/// Mean, variance and left variance of a finite population of values. The
/// left variance counts values strictly below the mean.
inline DistributionParams population_params(std::span<const double> values) {
  CompensatedSum sum;
  for (double v : values) sum += v;
  const double mean = sum.value() / static_cast<double>(values.size());
  CompensatedSum all, left;
  for (double v : values) {
    const double d2 = (v - mean) * (v - mean);
    all += d2;
    if (v < mean) left += d2;
  }
  const auto count = static_cast<double>(values.size());
  return {mean, all.value() / count, left.value() / count};
}

inline DistributionParams exact_distribution_params(const CoefficientConfig& config, std::size_t n,
                                                    unsigned threads = 0) {
  if (n < 2) throw Error(ErrorCode::DegenerateLength, "correlation needs n >= 2");
  return population_params(exact_coefficient_values(config, n, threads));
}

// ---------------------------------------------------------------------------
// Monte Carlo

struct SampleStats {
  double mean = 0.0;
  double mean_variance = 0.0;  // sample variance / n_samp
  double variance = 0.0;       // centred on `center`, divisor n_samp
  double left_variance = 0.0;
  double center = 0.0;
  std::uint64_t n_samp = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kSampleChunk = 1024;

/// n_samp coefficient values Γ(identity, pi) for uniformly drawn pi. Chunk c
/// draws from stream c of the seed, so the result is fixed by (seed, n_samp).
inline std::vector<double> sample_coefficients(const CoefficientConfig& config, std::size_t n,
                                               std::uint64_t n_samp, std::uint64_t seed,
                                               unsigned threads = 0) {
  if (n < 2) throw Error(ErrorCode::DegenerateLength, "correlation needs n >= 2");
  std::vector<double> values(static_cast<std::size_t>(n_samp));
  const std::size_t chunks = (values.size() + kSampleChunk - 1) / kSampleChunk;
  const CounterRng root(seed);
  const auto identity = Permutation::identity(n);
  parallel_blocks(chunks, threads, [&](std::size_t chunk) {
    CounterRng rng = root.split(chunk);
    Evaluator ev(config, n);
    std::vector<Permutation::value_type> pi(n);
    const std::size_t end = std::min(values.size(), (chunk + 1) * kSampleChunk);
    for (std::size_t i = chunk * kSampleChunk; i < end; ++i) {
      sample_into(pi, rng);
      values[i] = ev(identity.image(), pi);
    }
  });
  return values;
}

/// Summary of sampled values. Variance and left variance are centred on
/// `center` when given (a fitted mean), else on the sample mean.
inline SampleStats summarize_samples(std::span<const double> values, std::uint64_t seed,
                                     std::optional<double> center = std::nullopt) {
  if (values.size() < 2) throw Error(ErrorCode::DegenerateLength, "need at least two samples");
  SampleStats s;
  s.n_samp = values.size();
  s.seed = seed;
  CompensatedSum sum;
  for (double v : values) sum += v;
  const auto count = static_cast<double>(values.size());
  s.mean = sum.value() / count;
  CompensatedSum dev;
  for (double v : values) dev += (v - s.mean) * (v - s.mean);
  s.mean_variance = dev.value() / (count - 1.0) / count;
  s.center = center.value_or(s.mean);
  CompensatedSum all, left;
  for (double v : values) {
    const double d2 = (v - s.center) * (v - s.center);
    all += d2;
    if (v < s.center) left += d2;
  }
  s.variance = all.value() / count;
  s.left_variance = left.value() / count;
  return s;
}

inline SampleStats mc_estimate(const CoefficientConfig& config, std::size_t n,
                               std::uint64_t n_samp, std::uint64_t seed,
                               std::optional<double> gamma_bar_ref = std::nullopt,
                               unsigned threads = 0) {
  if (n_samp < 2) throw Error(ErrorCode::DegenerateLength, "need at least two samples");
  const auto values = sample_coefficients(config, n, n_samp, seed, threads);
  return summarize_samples(values, seed, gamma_bar_ref);
}

// ---------------------------------------------------------------------------
// Regression pipeline

/// Sample count as a function of ranking length: the first tier whose
/// max_length covers n applies; the last tier is open-ended.
struct SampleTier {
  std::uint64_t max_length;
  std::uint64_t samples;
};

inline std::vector<SampleTier> default_sample_schedule(CoefficientKind kind) {
  constexpr auto open = std::numeric_limits<std::uint64_t>::max();
  if (kind == CoefficientKind::Spearman) return {{100, 100000}, {open, 10000}};
  return {{100, 10000}, {1500, 1000}, {open, 200}};
}

inline std::uint64_t samples_for_length(std::span<const SampleTier> schedule, std::uint64_t n) {
  for (const auto& tier : schedule)
    if (n <= tier.max_length) return tier.samples;
  return schedule.empty() ? 0 : schedule.back().samples;
}

struct TrainingSettings {
  double q = 1.3;
  int a_min = 9;
  int a_max = 30;
  std::vector<SampleTier> schedule;  // empty: default for the coefficient kind
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::size_t max_degree = 8;
  // Also fit through the enumerated values at n = 3..10. They carry no
  // sampling error, so their weight is a multiple of the most precise sampled
  // point's.
  bool anchor_exact = true;
  double anchor_weight_scale = 10.0;
  std::ostream* log = nullptr;
};

/// {round(q^a) : a_min <= a <= a_max}, ascending, duplicates removed.
inline std::vector<std::uint64_t> training_lengths(const TrainingSettings& s) {
  if (!(s.q > 1.0)) throw Error(ErrorCode::OutOfDomain, "q must exceed 1");
  std::set<std::uint64_t> lengths;
  for (int a = s.a_min; a <= s.a_max; ++a)
    lengths.insert(static_cast<std::uint64_t>(std::llround(std::pow(s.q, a))));
  return {lengths.begin(), lengths.end()};
}

/// Transform applied to the mean fit: 1/log n for harmonic weights and for the
/// multiplicative scheme, 1/n otherwise.
inline LengthTransform gamma_transform(const CoefficientConfig& c) {
  if (!c.weighting) return LengthTransform::Inverse;
  if (c.weighting->function.kind == WeightFunction::Kind::Harmonic) return LengthTransform::InverseLog;
  return c.weighting->scheme == WeightScheme::Multiplicative ? LengthTransform::InverseLog
                                                             : LengthTransform::Inverse;
}

/// Transform for the variance fits: 1/log n only for multiplicative
/// inverse-quadratic weights.
inline LengthTransform variance_transform(const CoefficientConfig& c) {
  if (c.weighting && c.weighting->scheme == WeightScheme::Multiplicative &&
      c.weighting->function.kind == WeightFunction::Kind::InverseQuadratic)
    return LengthTransform::InverseLog;
  return LengthTransform::Inverse;
}

struct PipelineReport {
  ParameterEntry entry;
  std::vector<std::uint64_t> lengths;
  std::vector<SampleStats> samples;  // one per training length, recentred
  std::size_t degree_gamma = 0;
  std::size_t degree_variance = 0;
  std::size_t degree_left_variance = 0;
};

namespace detail {

inline RegressionModel fit_selected(std::vector<FitPoint> points, LengthTransform t,
                                    std::size_t max_degree, std::size_t& degree_out) {
  std::sort(points.begin(), points.end(), [](const FitPoint& l, const FitPoint& r) { return l.x < r.x; });
  degree_out = select_degree(points, max_degree);
  return fit_polynomial(points, degree_out, t);
}

}  // namespace detail

/// Exact values for n <= 10, Monte Carlo at the training lengths, then
/// polynomial fits in x(n): the mean with inverse-variance weights, the two
/// variances unweighted after recentring on the fitted mean.
inline PipelineReport build_parameter_models_report(const CoefficientConfig& config,
                                                    const TrainingSettings& settings) {
  PipelineReport report;
  report.entry.config = config;
  for (std::uint64_t n = kFirstTabulatedLength; n <= kLastExactLength; ++n)
    report.entry.exact[n] = exact_distribution_params(config, n, settings.threads);

  const auto schedule =
      settings.schedule.empty() ? default_sample_schedule(config.kind) : settings.schedule;
  report.lengths = training_lengths(settings);
  if (report.lengths.empty()) throw Error(ErrorCode::OutOfDomain, "no training lengths");

  std::vector<std::vector<double>> draws;
  for (std::uint64_t n : report.lengths) {
    const std::uint64_t n_samp = samples_for_length(schedule, n);
    const std::uint64_t seed = CounterRng(settings.seed).split(n)();
    if (settings.log)
      *settings.log << "sampling " << to_string(config) << " n=" << n << " n_samp=" << n_samp
                    << " seed=" << seed << "\n";
    draws.push_back(sample_coefficients(config, n, n_samp, seed, settings.threads));
    report.samples.push_back(summarize_samples(draws.back(), seed));
  }

  const auto tg = gamma_transform(config);
  const auto tv = variance_transform(config);

  double best_weight = 0.0;
  std::vector<FitPoint> gamma_points;
  for (std::size_t k = 0; k < report.lengths.size(); ++k) {
    const auto& s = report.samples[k];
    const double weight = s.mean_variance > 0.0 ? 1.0 / s.mean_variance : 1e300;
    best_weight = std::max(best_weight, weight);
    gamma_points.push_back({transform_length(report.lengths[k], tg), s.mean, weight});
  }
  if (settings.anchor_exact)
    for (const auto& [n, p] : report.entry.exact)
      gamma_points.push_back({transform_length(n, tg), p.gamma_bar, best_weight * settings.anchor_weight_scale});
  report.entry.model_gamma = detail::fit_selected(gamma_points, tg, settings.max_degree, report.degree_gamma);

  // Second pass: centre the sampled variances on the fitted mean.
  std::vector<FitPoint> v_points, l_points;
  for (std::size_t k = 0; k < report.lengths.size(); ++k) {
    const std::uint64_t n = report.lengths[k];
    const double center = evaluate_model(report.entry.model_gamma, n).value;
    report.samples[k] = summarize_samples(draws[k], report.samples[k].seed, center);
    v_points.push_back({transform_length(n, tv), report.samples[k].variance, 1.0});
    l_points.push_back({transform_length(n, tv), report.samples[k].left_variance, 1.0});
  }
  if (settings.anchor_exact) {
    for (const auto& [n, p] : report.entry.exact) {
      v_points.push_back({transform_length(n, tv), p.variance, 1.0});
      l_points.push_back({transform_length(n, tv), p.left_variance, 1.0});
    }
  }
  report.entry.model_variance = detail::fit_selected(v_points, tv, settings.max_degree, report.degree_variance);
  report.entry.model_left_variance =
      detail::fit_selected(l_points, tv, settings.max_degree, report.degree_left_variance);

  // 1/n fits are trusted at any length; 1/log n fits only up to the data.
  const std::uint64_t longest = report.lengths.back();
  for (auto* m : {&report.entry.model_gamma, &report.entry.model_variance,
                  &report.entry.model_left_variance}) {
    if (m->transform == LengthTransform::InverseLog) m->n_max = longest;
  }
  return report;
}

inline ParameterEntry build_parameter_models(const CoefficientConfig& config,
                                             const TrainingSettings& settings) {
  return build_parameter_models_report(config, settings).entry;
}

}  // namespace rankcorr
