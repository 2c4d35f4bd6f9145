#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace rankcorr {

struct HistogramSeries {
  std::string label;  // "raw" or "standardized"
  std::vector<double> edges;      // bins + 1
  std::vector<double> densities;  // per bin, integrates to 1
  double bandwidth = 0.0;
  std::vector<double> kde_x;
  std::vector<double> kde_y;
  double mean = 0.0;
  double sd = 0.0;
  std::size_t n_samp = 0;
};

/// 0.4 times Scott's rule for one dimension: 0.4 * N^(-1/5) * SD.
inline double kde_bandwidth(std::size_t n, double sd) {
  return 0.4 * std::pow(static_cast<double>(n), -0.2) * sd;
}

/// Gaussian KDE evaluated on a grid.
inline std::vector<double> gaussian_kde(std::span<const double> samples, double bandwidth,
                                        std::span<const double> grid) {
  std::vector<double> y(grid.size(), 0.0);
  if (samples.empty() || !(bandwidth > 0.0)) return y;
  const double norm = 1.0 / (static_cast<double>(samples.size()) * bandwidth * std::sqrt(2.0 * std::numbers::pi));
  // Sorted samples let each grid point skip everything beyond 8 bandwidths.
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double x = grid[g];
    auto lo = std::lower_bound(sorted.begin(), sorted.end(), x - 8.0 * bandwidth);
    auto hi = std::upper_bound(sorted.begin(), sorted.end(), x + 8.0 * bandwidth);
    CompensatedSum s;
    for (auto it = lo; it != hi; ++it) {
      const double u = (x - *it) / bandwidth;
      s += std::exp(-0.5 * u * u);
    }
    y[g] = s.value() * norm;
  }
  return y;
}

/// Histogram over [lo, hi] plus a KDE on `grid_points` evenly spaced points.
/// Samples outside the range are clamped into the edge bins.
inline HistogramSeries make_histogram(std::span<const double> samples, std::string label,
                                      std::size_t bins = 50, double lo = -1.0, double hi = 1.0,
                                      std::size_t grid_points = 401) {
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "no samples");
  if (bins == 0 || !(hi > lo)) throw Error(ErrorCode::OutOfDomain, "bad histogram range");
  HistogramSeries h;
  h.label = std::move(label);
  h.n_samp = samples.size();
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges.push_back(lo + width * static_cast<double>(i));
  std::vector<std::size_t> counts(bins, 0);
  CompensatedSum sum;
  for (double v : samples) {
    auto k = static_cast<long long>(std::floor((v - lo) / width));
    k = std::clamp<long long>(k, 0, static_cast<long long>(bins) - 1);
    ++counts[static_cast<std::size_t>(k)];
    sum += v;
  }
  const auto n = static_cast<double>(samples.size());
  for (std::size_t c : counts) h.densities.push_back(static_cast<double>(c) / (n * width));
  h.mean = sum.value() / n;
  CompensatedSum dev;
  for (double v : samples) dev += (v - h.mean) * (v - h.mean);
  h.sd = samples.size() > 1 ? std::sqrt(dev.value() / (n - 1.0)) : 0.0;
  h.bandwidth = kde_bandwidth(samples.size(), h.sd);
  const std::size_t m = std::max<std::size_t>(grid_points, 2);
  for (std::size_t i = 0; i < m; ++i)
    h.kde_x.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1));
  h.kde_y = gaussian_kde(samples, h.bandwidth, h.kde_x);
  return h;
}

inline double histogram_mass(const HistogramSeries& h) {
  double mass = 0.0;
  for (std::size_t i = 0; i < h.densities.size(); ++i) mass += h.densities[i] * (h.edges[i + 1] - h.edges[i]);
  return mass;
}

}  // namespace rankcorr
