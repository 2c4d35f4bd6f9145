#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fenwick.hpp"
#include "numeric.hpp"
#include "permutation.hpp"

namespace rankcorr {

/// Positional weight f(i) for 1-based rank position i.
struct WeightFunction {
  enum class Kind { Harmonic, InverseQuadratic, Constant };

  Kind kind = Kind::Harmonic;
  unsigned n0 = 0;  // offset, InverseQuadratic only

  static constexpr WeightFunction harmonic() { return {Kind::Harmonic, 0}; }
  static constexpr WeightFunction inverse_quadratic(unsigned n0) {
    return {Kind::InverseQuadratic, n0};
  }
  static constexpr WeightFunction constant() { return {Kind::Constant, 0}; }

  friend constexpr bool operator==(const WeightFunction& l, const WeightFunction& r) {
    return l.kind == r.kind && (l.kind != Kind::InverseQuadratic || l.n0 == r.n0);
  }
};

enum class WeightScheme { Additive, Multiplicative };
enum class CoefficientKind { Spearman, Kendall };

struct Weighting {
  WeightFunction function;
  WeightScheme scheme = WeightScheme::Additive;

  friend constexpr bool operator==(const Weighting&, const Weighting&) = default;
};

struct CoefficientConfig {
  CoefficientKind kind = CoefficientKind::Spearman;
  std::optional<Weighting> weighting;  // empty: the classical coefficient

  [[nodiscard]] bool is_weighted() const noexcept { return weighting.has_value(); }

  static CoefficientConfig spearman() { return {CoefficientKind::Spearman, std::nullopt}; }
  static CoefficientConfig kendall() { return {CoefficientKind::Kendall, std::nullopt}; }
  static CoefficientConfig weighted(CoefficientKind kind, WeightFunction f, WeightScheme scheme) {
    return {kind, Weighting{f, scheme}};
  }

  friend bool operator==(const CoefficientConfig&, const CoefficientConfig&) = default;
};

/// Normalised per-item weights; sums to one.
struct WeightVector {
  std::vector<double> w;
};

// ---------------------------------------------------------------------------
// Names used by the CLI flags and the table file.

inline std::string to_string(CoefficientKind k) {
  return k == CoefficientKind::Spearman ? "spearman" : "kendall";
}
inline std::string to_string(WeightScheme s) {
  return s == WeightScheme::Additive ? "additive" : "multiplicative";
}
/// Short flag form: harmonic, iq<n0>, constant.
inline std::string to_string(const WeightFunction& f) {
  switch (f.kind) {
    case WeightFunction::Kind::Harmonic: return "harmonic";
    case WeightFunction::Kind::InverseQuadratic: return "iq" + std::to_string(f.n0);
    case WeightFunction::Kind::Constant: return "constant";
  }
  return "?";
}
inline std::string to_string(const CoefficientConfig& c) {
  std::string s = to_string(c.kind);
  if (c.weighting) s += "/" + to_string(c.weighting->scheme) + "/" + to_string(c.weighting->function);
  return s;
}

inline CoefficientKind parse_coefficient_kind(const std::string& s) {
  if (s == "spearman") return CoefficientKind::Spearman;
  if (s == "kendall") return CoefficientKind::Kendall;
  throw Error(ErrorCode::UnknownConfig, "coefficient '" + s + "'");
}
inline WeightScheme parse_weight_scheme(const std::string& s) {
  if (s == "additive") return WeightScheme::Additive;
  if (s == "multiplicative") return WeightScheme::Multiplicative;
  throw Error(ErrorCode::UnknownConfig, "weighting scheme '" + s + "'");
}
inline WeightFunction parse_weight_function(const std::string& s) {
  if (s == "harmonic") return WeightFunction::harmonic();
  if (s == "constant") return WeightFunction::constant();
  if (s.size() > 2 && s.rfind("iq", 0) == 0) {
    try {
      std::size_t used = 0;
      const unsigned long n0 = std::stoul(s.substr(2), &used);
      if (used == s.size() - 2) return WeightFunction::inverse_quadratic(static_cast<unsigned>(n0));
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::UnknownConfig, "weight function '" + s + "'");
}

/// Inverse of to_string(CoefficientConfig): "kendall" or "kendall/additive/iq1".
inline CoefficientConfig parse_coefficient_config(const std::string& s) {
  const auto first = s.find('/');
  if (first == std::string::npos) return {parse_coefficient_kind(s), std::nullopt};
  const auto second = s.find('/', first + 1);
  if (second == std::string::npos) throw Error(ErrorCode::UnknownConfig, "config '" + s + "'");
  return CoefficientConfig::weighted(parse_coefficient_kind(s.substr(0, first)),
                                     parse_weight_function(s.substr(second + 1)),
                                     parse_weight_scheme(s.substr(first + 1, second - first - 1)));
}

/// The sixteen weighted configurations with published parameters:
/// {Spearman, Kendall} x {additive, multiplicative} x {1/i, 1/i^2, 1/(i+1)^2, 1/(i+2)^2}.
inline std::vector<CoefficientConfig> published_weighted_configs() {
  std::vector<CoefficientConfig> out;
  for (auto kind : {CoefficientKind::Spearman, CoefficientKind::Kendall})
    for (auto scheme : {WeightScheme::Additive, WeightScheme::Multiplicative})
      for (auto f : {WeightFunction::harmonic(), WeightFunction::inverse_quadratic(0),
                     WeightFunction::inverse_quadratic(1), WeightFunction::inverse_quadratic(2)})
        out.push_back(CoefficientConfig::weighted(kind, f, scheme));
  return out;
}

// ---------------------------------------------------------------------------

inline double eval_weight_function(const WeightFunction& f, std::size_t position) {
  if (position < 1) throw Error(ErrorCode::InvalidPosition, "weight positions start at 1");
  switch (f.kind) {
    case WeightFunction::Kind::Harmonic: return 1.0 / static_cast<double>(position);
    case WeightFunction::Kind::InverseQuadratic: {
      const double d = static_cast<double>(position) + static_cast<double>(f.n0);
      return 1.0 / (d * d);
    }
    case WeightFunction::Kind::Constant: return 1.0;
  }
  return 1.0;
}

namespace detail {

using Ranks = std::span<const Permutation::value_type>;

inline void check_pair(std::size_t na, std::size_t nb) {
  if (na != nb) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(na) + " vs " + std::to_string(nb));
  }
  if (na < 2) throw Error(ErrorCode::DegenerateLength, "correlation needs n >= 2");
}

}  // namespace detail

/// Reusable evaluator for one configuration and length. Holds the f table and
/// scratch buffers, so it is cheap to call repeatedly but must not be shared
/// between threads; build one per thread.
class Evaluator {
 public:
  Evaluator(CoefficientConfig config, std::size_t n) : config_(config), n_(n) {
    if (n < 2) throw Error(ErrorCode::DegenerateLength, "correlation needs n >= 2");
    if (config_.weighting) {
      f_.resize(n);
      CompensatedSum total;
      for (std::size_t i = 0; i < n; ++i) {
        f_[i] = eval_weight_function(config_.weighting->function, i + 1);
        total += f_[i];
      }
      f_total_ = total.value();
    }
    w_.resize(n);
    pos_.resize(n);
  }

  [[nodiscard]] const CoefficientConfig& config() const noexcept { return config_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  /// Coefficient for rankings a and b given as 0-based rank spans.
  double operator()(detail::Ranks a, detail::Ranks b) {
    detail::check_pair(a.size(), b.size());
    if (a.size() != n_) throw Error(ErrorCode::LengthMismatch, "evaluator built for another n");
    if (!config_.weighting) {
      return config_.kind == CoefficientKind::Spearman ? spearman_core(a, b) : kendall_core(a, b);
    }
    fill_weights(a, b);
    return config_.kind == CoefficientKind::Spearman ? weighted_spearman_core(a, b)
                                                     : weighted_kendall_fast_core(a, b);
  }

  /// Combined weights for the pair, written into the internal buffer.
  std::span<const double> fill_weights(detail::Ranks a, detail::Ranks b) {
    const auto& wt = *config_.weighting;
    if (wt.scheme == WeightScheme::Additive) {
      const double denom = 2.0 * f_total_;
      for (std::size_t i = 0; i < n_; ++i) w_[i] = (f_[a[i]] + f_[b[i]]) / denom;
    } else {
      CompensatedSum total;
      for (std::size_t i = 0; i < n_; ++i) {
        w_[i] = f_[a[i]] * f_[b[i]];
        total += w_[i];
      }
      const double t = total.value();
      for (auto& x : w_) x /= t;
    }
    return w_;
  }

  double weighted_kendall_fast_core(detail::Ranks a, detail::Ranks b) {
    // Walk items in increasing a-rank; a predecessor j of item i is
    // concordant iff b[j] < b[i], so the concordant weight is a prefix sum of
    // w over b-ranks seen so far.
    for (std::size_t i = 0; i < n_; ++i) pos_[a[i]] = static_cast<Permutation::value_type>(i);
    tree_.reset(n_);
    CompensatedSum concordant, total, squares;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t item = pos_[k];
      const double wi = w_[item];
      concordant += wi * tree_.prefix(b[item]);
      tree_.add(b[item], wi);
      total += wi;
      squares += wi * wi;
    }
    const double sum = total.value();
    const double pairs = 0.5 * (sum * sum - squares.value());
    return std::clamp((2.0 * concordant.value() - pairs) / pairs, -1.0, 1.0);
  }

 private:
  double spearman_core(detail::Ranks a, detail::Ranks b) const {
    std::uint64_t d2 = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto d = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
      d2 += static_cast<std::uint64_t>(d * d);
    }
    const double n = static_cast<double>(n_);
    return 1.0 - 6.0 * static_cast<double>(d2) / (n * (n * n - 1.0));
  }

  double kendall_core(detail::Ranks a, detail::Ranks b) {
    for (std::size_t i = 0; i < n_; ++i) pos_[a[i]] = static_cast<Permutation::value_type>(i);
    FenwickTree<std::uint64_t> seen(n_);
    std::uint64_t discordant = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t item = pos_[k];
      discordant += k - seen.prefix(b[item]);
      seen.add(b[item], 1);
    }
    const double n = static_cast<double>(n_);
    return 1.0 - 4.0 * static_cast<double>(discordant) / (n * (n - 1.0));
  }

  double weighted_spearman_core(detail::Ranks a, detail::Ranks b) const {
    CompensatedSum sa, sb;
    for (std::size_t i = 0; i < n_; ++i) {
      sa += w_[i] * a[i];
      sb += w_[i] * b[i];
    }
    const double ma = sa.value(), mb = sb.value();
    CompensatedSum cov, va, vb;
    for (std::size_t i = 0; i < n_; ++i) {
      const double da = a[i] - ma, db = b[i] - mb;
      cov += w_[i] * da * db;
      va += w_[i] * da * da;
      vb += w_[i] * db * db;
    }
    const double denom = va.value() * vb.value();
    if (!(denom > 0.0)) throw Error(ErrorCode::ZeroVariance, "weighted rank variance vanishes");
    const double r = cov.value() / std::sqrt(denom);
    return std::clamp(r, -1.0, 1.0);
  }

  CoefficientConfig config_;
  std::size_t n_;
  std::vector<double> f_;  // f_[r] = f(r + 1)
  double f_total_ = 0.0;
  std::vector<double> w_;
  std::vector<Permutation::value_type> pos_;
  FenwickTree<double> tree_;
};

// ---------------------------------------------------------------------------
// Free-function API over Permutation values.

inline WeightVector combine_weights(const WeightFunction& f, const Permutation& a,
                                    const Permutation& b, WeightScheme scheme) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  WeightVector out{std::vector<double>(n)};
  if (scheme == WeightScheme::Additive) {
    CompensatedSum total;
    for (std::size_t j = 1; j <= n; ++j) total += eval_weight_function(f, j);
    const double denom = 2.0 * total.value();
    for (std::size_t i = 0; i < n; ++i)
      out.w[i] = (eval_weight_function(f, a[i] + 1) + eval_weight_function(f, b[i] + 1)) / denom;
  } else {
    CompensatedSum total;
    for (std::size_t i = 0; i < n; ++i) {
      out.w[i] = eval_weight_function(f, a[i] + 1) * eval_weight_function(f, b[i] + 1);
      total += out.w[i];
    }
    for (auto& x : out.w) x /= total.value();
  }
  for (double x : out.w)
    if (!(x > 0.0)) throw Error(ErrorCode::ZeroVariance, "non-positive combined weight");
  return out;
}

inline double evaluate(const CoefficientConfig& config, const Permutation& a,
                       const Permutation& b) {
  detail::check_pair(a.size(), b.size());
  Evaluator ev(config, a.size());
  return ev(a.image(), b.image());
}

inline double spearman(const Permutation& a, const Permutation& b) {
  return evaluate(CoefficientConfig::spearman(), a, b);
}

inline double kendall(const Permutation& a, const Permutation& b) {
  return evaluate(CoefficientConfig::kendall(), a, b);
}

inline double weighted_spearman(const Permutation& a, const Permutation& b,
                                const WeightFunction& f, WeightScheme scheme) {
  return evaluate(CoefficientConfig::weighted(CoefficientKind::Spearman, f, scheme), a, b);
}

inline double weighted_kendall_fast(const Permutation& a, const Permutation& b,
                                    const WeightFunction& f, WeightScheme scheme) {
  return evaluate(CoefficientConfig::weighted(CoefficientKind::Kendall, f, scheme), a, b);
}

/// Direct O(n^2) pair loop. Reference path for the fast evaluator.
inline double weighted_kendall_naive(const Permutation& a, const Permutation& b,
                                     const WeightFunction& f, WeightScheme scheme) {
  detail::check_pair(a.size(), b.size());
  const auto w = combine_weights(f, a, b, scheme).w;
  const std::size_t n = a.size();
  CompensatedSum concordant, discordant, all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ww = w[i] * w[j];
      const bool same = (a[j] > a[i]) == (b[j] > b[i]);
      (same ? concordant : discordant) += ww;
      all += ww;
    }
  }
  return (concordant.value() - discordant.value()) / all.value();
}

}  // namespace rankcorr
