#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rankcorr {

/// Reparameterisation of the ranking length used as regression abscissa;
/// both map n -> infinity to x -> 0.
enum class LengthTransform { Inverse, InverseLog };

inline std::string to_string(LengthTransform t) {
  return t == LengthTransform::Inverse ? "inverse" : "inverse_log";
}

inline double transform_length(std::uint64_t n, LengthTransform t) {
  if (t == LengthTransform::Inverse) {
    if (n < 1) throw Error(ErrorCode::InvalidLength, "1/n needs n >= 1");
    return 1.0 / static_cast<double>(n);
  }
  if (n < 2) throw Error(ErrorCode::InvalidLength, "1/log(n) needs n >= 2");
  return 1.0 / std::log(static_cast<double>(n));
}

/// Polynomial in x(n). n_max is the largest length the model was trained on;
/// empty means the fit is trusted at any length.
struct RegressionModel {
  LengthTransform transform = LengthTransform::Inverse;
  std::vector<double> coefficients;  // c_0 .. c_degree
  std::optional<std::uint64_t> n_max;

  [[nodiscard]] std::size_t degree() const noexcept {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }

  [[nodiscard]] double polynomial(double x) const noexcept {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

struct ModelValue {
  double value = 0.0;
  bool extrapolated = false;  // n beyond the model's n_max
};

inline ModelValue evaluate_model(const RegressionModel& m, std::uint64_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidLength, "models are defined for n >= 3");
  return {m.polynomial(transform_length(n, m.transform)), m.n_max.has_value() && n > *m.n_max};
}

struct FitPoint {
  double x = 0.0;
  double y = 0.0;
  double weight = 1.0;
};

/// Minimises sum weight * (p(x) - y)^2 through a column-pivoting Householder
/// QR of the row-scaled Vandermonde matrix.
inline RegressionModel fit_polynomial(std::span<const FitPoint> points, std::size_t degree,
                                      LengthTransform transform = LengthTransform::Inverse) {
  const std::size_t cols = degree + 1;
  if (points.size() < cols) {
    throw Error(ErrorCode::RankDeficient, std::to_string(points.size()) +
                                              " points cannot determine degree " +
                                              std::to_string(degree));
  }
  std::set<double> distinct;
  for (const auto& p : points) {
    if (!(p.weight > 0.0) || !std::isfinite(p.weight))
      throw Error(ErrorCode::OutOfDomain, "fit weights must be positive and finite");
    distinct.insert(p.x);
  }
  if (distinct.size() < cols) {
    throw Error(ErrorCode::RankDeficient, std::to_string(distinct.size()) +
                                              " distinct abscissae for degree " +
                                              std::to_string(degree));
  }

  Eigen::MatrixXd design(points.size(), cols);
  Eigen::VectorXd rhs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double s = std::sqrt(points[i].weight);
    double xp = 1.0;
    for (std::size_t d = 0; d < cols; ++d) {
      design(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d)) = s * xp;
      xp *= points[i].x;
    }
    rhs(static_cast<Eigen::Index>(i)) = s * points[i].y;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < static_cast<Eigen::Index>(cols))
    throw Error(ErrorCode::RankDeficient, "Vandermonde system is numerically rank deficient");
  const Eigen::VectorXd c = qr.solve(rhs);
  RegressionModel model;
  model.transform = transform;
  model.coefficients.assign(c.data(), c.data() + c.size());
  return model;
}

/// Unweighted mean squared error of a model over points.
inline double mean_squared_error(const RegressionModel& m, std::span<const FitPoint> points) {
  double sum = 0.0;
  for (const auto& p : points) {
    const double r = m.polynomial(p.x) - p.y;
    sum += r * r;
  }
  return sum / static_cast<double>(points.size());
}

/// Degree chosen by fitting on the points at even positions and scoring on
/// all of them. Degree D replaces D-1 while MSE(D)/MSE(D-1) < 0.8 or
/// MSE(D+1)/MSE(D-1) < 0.5; the scan stops at the first rejection, or once the
/// error is already at rounding level.
inline std::size_t select_degree(std::span<const FitPoint> points, std::size_t max_degree = 8) {
  if (points.size() < 4) throw Error(ErrorCode::RankDeficient, "degree selection needs 4 points");
  std::vector<FitPoint> even;
  for (std::size_t i = 0; i < points.size(); i += 2) even.push_back(points[i]);
  std::set<double> distinct;
  for (const auto& p : even) distinct.insert(p.x);
  max_degree = std::min(max_degree, distinct.size() - 1);
  if (max_degree <= 1) return 1;

  double scale = 0.0;
  for (const auto& p : points) scale += p.y * p.y;
  scale /= static_cast<double>(points.size());
  const double floor = 1e-20 * std::max(scale, std::numeric_limits<double>::min());

  std::vector<double> mse(max_degree + 1, std::numeric_limits<double>::infinity());
  for (std::size_t d = 0; d <= max_degree; ++d) {
    try {
      mse[d] = mean_squared_error(fit_polynomial(even, d), points);
    } catch (const Error&) {
      max_degree = d == 0 ? 0 : d - 1;
      break;
    }
  }

  std::size_t best = 1;
  for (std::size_t d = 2; d <= max_degree; ++d) {
    if (mse[d - 1] <= floor) break;
    const bool better = mse[d] / mse[d - 1] < 0.8;
    const bool lookahead = d + 1 <= max_degree && mse[d + 1] / mse[d - 1] < 0.5;
    if (!(better || lookahead)) break;
    best = d;
  }
  return best;
}

}  // namespace rankcorr
