#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "coefficients.hpp"
#include "errors.hpp"
#include "json.hpp"

namespace rankcorr {

/// Mean, variance and left variance of a coefficient over uniformly random
/// permutations. These three numbers fully determine the standardization map.
struct DistributionParams {
  double gamma_bar = 0.0;
  double variance = 1.0;
  double left_variance = 0.5;

  /// Throws OutOfDomain unless -1 < gamma_bar < 1 and 0 < left_variance <= variance.
  void validate() const {
    if (!(gamma_bar > -1.0 && gamma_bar < 1.0))
      throw Error(ErrorCode::OutOfDomain, "gamma_bar must lie in (-1, 1)");
    if (!(variance > 0.0)) throw Error(ErrorCode::OutOfDomain, "variance must be positive");
    if (!(left_variance > 0.0 && left_variance <= variance))
      throw Error(ErrorCode::OutOfDomain, "left variance must lie in (0, variance]");
  }

  /// Soft checks that estimated parameters can fail without being unusable.
  [[nodiscard]] std::vector<std::string> warnings() const {
    std::vector<std::string> out;
    if (variance > 1.0 - gamma_bar * gamma_bar + 1e-12)
      out.emplace_back("variance exceeds 1 - gamma_bar^2, impossible on [-1, 1]");
    return out;
  }

  friend bool operator==(const DistributionParams&, const DistributionParams&) = default;
};

struct Tolerances {
  double eps_f = 1e-6;  // flat variance-ratio test
  double eps_b = 1e-8;  // degenerate-bound tests in the g0 search
};

/// g(x) = g0 + g1 (x - gamma_bar) + {g2 | h2} (x - gamma_bar)^2, with g2 left
/// of gamma_bar and h2 right of it.
struct Standardizer {
  double gamma_bar = 0.0;
  double g0 = 0.0;
  double g1 = 1.0;
  double g2 = 0.0;
  double h2 = 0.0;

  static constexpr Standardizer identity() { return {}; }

  [[nodiscard]] bool is_identity() const noexcept {
    return gamma_bar == 0.0 && g0 == 0.0 && g1 == 1.0 && g2 == 0.0 && h2 == 0.0;
  }

  [[nodiscard]] double value(double x) const noexcept {
    const double d = x - gamma_bar;
    return g0 + g1 * d + (x < gamma_bar ? g2 : h2) * d * d;
  }

  [[nodiscard]] double derivative(double x) const noexcept {
    const double d = x - gamma_bar;
    return g1 + 2.0 * (x < gamma_bar ? g2 : h2) * d;
  }

  /// g(x) for x in [-1, 1]; inputs within 1e-12 of the boundary are snapped.
  [[nodiscard]] double apply(double x) const {
    constexpr double slack = 1e-12;
    if (!(x >= -1.0 - slack && x <= 1.0 + slack))
      throw Error(ErrorCode::OutOfDomain, "coefficient " + std::to_string(x) + " outside [-1, 1]");
    return value(std::clamp(x, -1.0, 1.0));
  }

  double operator()(double x) const { return apply(x); }

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

inline nlohmann::json to_json(const Standardizer& s) {
  return {{"gamma_bar", s.gamma_bar}, {"g0", s.g0}, {"g1", s.g1}, {"g2", s.g2}, {"h2", s.h2}};
}

inline Standardizer standardizer_from_json(const nlohmann::json& j) {
  try {
    return {j.at("gamma_bar").get<double>(), j.at("g0").get<double>(), j.at("g1").get<double>(),
            j.at("g2").get<double>(), j.at("h2").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

// ---------------------------------------------------------------------------

inline bool is_flat_variance_ratio(const DistributionParams& p, const Tolerances& tol = {}) {
  return std::abs(p.left_variance / p.variance - 0.5 * (1.0 + p.gamma_bar)) < tol.eps_f;
}

namespace detail {

inline Standardizer with_boundary_terms(double gamma_bar, double g0, double g1) {
  Standardizer s{gamma_bar, g0, g1, 0.0, 0.0};
  const double lo = 1.0 + gamma_bar, hi = 1.0 - gamma_bar;
  s.g2 = -(1.0 + g0) / (lo * lo) + g1 / lo;
  s.h2 = (1.0 - g0) / (hi * hi) - g1 / hi;
  return s;
}

/// Zero-mean relation g1 = (B g0 + C) / (1 - gamma_bar^2) and the terms of the
/// three derivative bounds share B and C.
struct AffineTerms {
  double a;  // 2 V_l - V (1 + gamma_bar)
  double b;
  double c;
};

inline AffineTerms affine_terms(const DistributionParams& p) {
  const double G = p.gamma_bar, V = p.variance, L = p.left_variance;
  const double one_minus_g2 = 1.0 - G * G;
  const double a = 2.0 * L - V * (1.0 + G);
  const double b = ((1.0 + G) * (1.0 + G) * V - 4.0 * G * L - one_minus_g2 * one_minus_g2) / a;
  const double c = (2.0 * (1.0 + G * G) * L - (1.0 + G) * (1.0 + G) * V) / a;
  return {a, b, c};
}

}  // namespace detail

/// Flat variance ratio: g0 is fixed by the zero-mean condition and g1 = 1
/// unless that breaks monotonicity, in which case g1 sits on its upper bound.
inline Standardizer build_flat_standardizer(const DistributionParams& p,
                                            const Tolerances& tol = {}) {
  p.validate();
  const double G = p.gamma_bar, V = p.variance;
  const double denom = 1.0 - G * G - V;
  if (std::abs(denom) < tol.eps_b) {
    // All mass on {-1, +1}: only the symmetric two-point case is standardizable
    // and any admissible map agrees with the identity there.
    if (std::abs(G) < tol.eps_b) return Standardizer::identity();
    throw Error(ErrorCode::InfeasibleFlatBound, "two-point distribution with nonzero mean");
  }
  const double g0 = -V * G / denom;
  const double upper = 2.0 * std::min(1.0 - G - V, 1.0 + G - V) / denom;
  if (!(upper > 0.0)) {
    throw Error(ErrorCode::InfeasibleFlatBound,
                "upper bound on g1 is " + std::to_string(upper) + " (must be positive)");
  }
  const double g1 = upper >= 1.0 ? 1.0 : upper;
  if (G == 0.0 && g0 == 0.0 && g1 == 1.0) return Standardizer::identity();
  return detail::with_boundary_terms(G, g0, g1);
}

/// g1 as the affine function of g0 that enforces zero mean (non-flat case).
inline double g1_from_g0(const DistributionParams& p, double g0, const Tolerances& tol = {}) {
  const auto t = detail::affine_terms(p);
  if (std::abs(t.a) < tol.eps_f * p.variance)
    throw Error(ErrorCode::FlatDenominator, "variance ratio is flat; g1 is not tied to g0");
  return (t.b * g0 + t.c) / (1.0 - p.gamma_bar * p.gamma_bar);
}

/// Admissible interval for g0 from g'(-1) >= 0, g'(gamma_bar) >= 0, g'(1) >= 0.
struct G0Bounds {
  double lower = -1.0;
  double upper = 1.0;
};

/// Intersects the three monotonicity bounds. Throws BoundConsistency when a
/// bound degenerates to an unsatisfiable constant or the interval is empty.
inline G0Bounds g0_bounds(const DistributionParams& p, const Tolerances& tol = {}) {
  const double G = p.gamma_bar;
  const auto t = detail::affine_terms(p);
  const double B = t.b, C = t.c;

  G0Bounds b1, b2, b3;

  // (i) g'(-1) >= 0:  [2(1-G) - B] g0 >= C - 2(1-G)
  const double k1 = 2.0 * (1.0 - G) - B;
  if (k1 > tol.eps_b) {
    b1.lower = (C - 2.0 * (1.0 - G)) / k1;
  } else if (k1 < -tol.eps_b) {
    b1.upper = (C - 2.0 * (1.0 - G)) / k1;
  } else if (std::abs(C - 2.0 * (1.0 - G)) > tol.eps_b) {
    throw Error(ErrorCode::BoundConsistency, "bound (i) degenerate with nonzero constant");
  }

  // (ii) g'(G) >= 0:  B g0 >= -C
  if (B > tol.eps_b) {
    b2.lower = -C / B;
  } else if (B < -tol.eps_b) {
    b2.upper = -C / B;
  } else if (std::abs(C) > tol.eps_b) {
    throw Error(ErrorCode::BoundConsistency, "bound (ii) degenerate with nonzero constant");
  }

  // (iii) g'(1) >= 0:  [2(1+G) + B] g0 <= 2(1+G) - C
  const double k3 = 2.0 * (1.0 + G) + B;
  if (k3 > tol.eps_b) {
    b3.upper = (2.0 * (1.0 + G) - C) / k3;
  } else if (k3 < -tol.eps_b) {
    b3.lower = (2.0 * (1.0 + G) - C) / k3;
  } else if (std::abs(C - 2.0 * (1.0 + G)) > tol.eps_b) {
    throw Error(ErrorCode::BoundConsistency, "bound (iii) degenerate with nonzero constant");
  }

  G0Bounds out{std::max({b1.lower, b2.lower, b3.lower}), std::min({b1.upper, b2.upper, b3.upper})};
  if (out.upper < out.lower) {
    throw Error(ErrorCode::BoundConsistency, "monotonicity bounds admit no g0: [" +
                                                 std::to_string(out.lower) + ", " +
                                                 std::to_string(out.upper) + "]");
  }
  return out;
}

/// Admissible g0 closest to zero.
inline double determine_g0(const DistributionParams& p, const Tolerances& tol = {}) {
  const auto bounds = g0_bounds(p, tol);
  double g0 = 0.0;
  if (bounds.lower > g0) {
    g0 = bounds.lower;
  } else if (bounds.upper < g0) {
    g0 = bounds.upper;
  }
  return g0;
}

namespace detail {

inline void verify(const Standardizer& s) {
  constexpr double tol = 1e-10;
  const double lo = s.value(-1.0), hi = s.value(1.0);
  if (std::abs(lo + 1.0) > tol || std::abs(hi - 1.0) > tol)
    throw Error(ErrorCode::BoundConsistency, "standardizer misses g(-1)=-1 or g(1)=1");
  if (s.derivative(-1.0) < -tol || s.g1 < -tol || s.derivative(1.0) < -tol)
    throw Error(ErrorCode::BoundConsistency, "standardizer is not monotone");
  if (!(s.g0 >= -1.0 && s.g0 <= 1.0))
    throw Error(ErrorCode::BoundConsistency, "g0 outside [-1, 1]");
}

}  // namespace detail

inline Standardizer build_standardizer(const DistributionParams& p, const Tolerances& tol = {}) {
  p.validate();
  const auto t = detail::affine_terms(p);
  Standardizer s;
  if (is_flat_variance_ratio(p, tol) || std::abs(t.a) < tol.eps_f * p.variance) {
    s = build_flat_standardizer(p, tol);
  } else {
    const double g0 = determine_g0(p, tol);
    s = detail::with_boundary_terms(p.gamma_bar, g0, g1_from_g0(p, g0, tol));
  }
  detail::verify(s);
  return s;
}

/// g(Γ(a, b)) with g built from `params`. Unweighted configurations use the
/// identity map regardless of the parameters supplied.
inline double standardized_coefficient(const CoefficientConfig& config, const Permutation& a,
                                       const Permutation& b, const DistributionParams& params,
                                       const Tolerances& tol = {}) {
  const double raw = evaluate(config, a, b);
  if (!config.is_weighted()) return raw;
  return build_standardizer(params, tol).apply(raw);
}

}  // namespace rankcorr
