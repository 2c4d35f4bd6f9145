#include <gtest/gtest.h>

#include <cmath>

#include "rankcorr/coefficients.hpp"
#include "rankcorr/random.hpp"
#include "rankcorr/standardizer.hpp"

using namespace rankcorr;

namespace {

const DistributionParams kSpearmanAddHarm3{-0.0351391, 0.5181185, 0.245896};
const DistributionParams kKendallMulIq0At3{-0.185488, 0.7021316, 0.2443723};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

// E[g(X)] written through the piecewise second moments: g0 + g2 Vl + h2 (V - Vl).
double moment_mean(const Standardizer& s, const DistributionParams& p) {
  return s.g0 + s.g2 * p.left_variance + s.h2 * (p.variance - p.left_variance);
}

// The three derivative conditions, each as a signed slack.
std::array<double, 3> derivative_slacks(const DistributionParams& p, double g0) {
  const auto s = detail::with_boundary_terms(p.gamma_bar, g0, g1_from_g0(p, g0));
  return {s.derivative(-1.0), s.g1, s.derivative(1.0)};
}

}  // namespace

TEST(FlatRatio, Examples) {
  EXPECT_TRUE(is_flat_variance_ratio({0.0, 1.0, 0.5}));
  EXPECT_TRUE(is_flat_variance_ratio({0.0, 0.4, 0.2}));
  EXPECT_FALSE(is_flat_variance_ratio(kSpearmanAddHarm3));
  const auto& p = kSpearmanAddHarm3;
  EXPECT_NEAR(std::abs(p.left_variance / p.variance - 0.5 * (1 + p.gamma_bar)), 7.8e-3, 1e-4);
}

TEST(Flat, SymmetricGivesIdentity) {
  EXPECT_TRUE(build_flat_standardizer({0.0, 0.5, 0.25}).is_identity());
  EXPECT_TRUE(build_flat_standardizer({0.0, 1.0, 0.5}).is_identity());
  EXPECT_TRUE(build_standardizer({0.0, 1.0, 0.5}).is_identity());
  EXPECT_TRUE(build_standardizer({0.0, 0.3, 0.15}).is_identity());
}

TEST(Flat, ShiftedMean) {
  const DistributionParams p{0.2, 0.3, 0.18};
  ASSERT_TRUE(is_flat_variance_ratio(p));
  const auto s = build_standardizer(p);
  EXPECT_NEAR(s.g0, -0.06 / (1 - 0.3 - 0.04), 1e-15);
  // g1 bound is 2 min(0.5, 0.9) / 0.66 > 1, so g1 stays 1.
  EXPECT_DOUBLE_EQ(s.g1, 1.0);
  EXPECT_NEAR(moment_mean(s, p), 0.0, 1e-14);
  EXPECT_NEAR(s(-1.0), -1.0, 1e-12);
  EXPECT_NEAR(s(1.0), 1.0, 1e-12);
}

TEST(Flat, BoundedSlope) {
  // Bound 2 min(1-G-V, 1+G-V) / (1-G^2-V) = 0.2 / 0.31 < 1, so g1 sits on it.
  const DistributionParams q{0.3, 0.6, 0.39};
  ASSERT_TRUE(is_flat_variance_ratio(q));
  const auto s = build_standardizer(q);
  EXPECT_NEAR(s.g1, 0.2 / 0.31, 1e-14);
  EXPECT_NEAR(moment_mean(s, q), 0.0, 1e-14);
  EXPECT_GE(s.derivative(-1.0), -1e-12);
  EXPECT_GE(s.derivative(1.0), -1e-12);
}

TEST(Flat, NegativeBoundIsInfeasible) {
  // 1 - G - V < 0
  const DistributionParams p{0.5, 0.6, 0.45};
  ASSERT_TRUE(is_flat_variance_ratio(p));
  EXPECT_EQ(code_of([&] { build_standardizer(p); }), ErrorCode::InfeasibleFlatBound);
}

TEST(G1FromG0, FlatDenominatorGuard) {
  EXPECT_EQ(code_of([] { g1_from_g0({0.0, 1.0, 0.5}, 0.0); }), ErrorCode::FlatDenominator);
}

TEST(G1FromG0, ZeroMeanForAnyG0) {
  for (const auto& p : {kSpearmanAddHarm3, kKendallMulIq0At3}) {
    for (double g0 : {-0.3, 0.0, 0.1, 0.25}) {
      const auto s = detail::with_boundary_terms(p.gamma_bar, g0, g1_from_g0(p, g0));
      EXPECT_NEAR(moment_mean(s, p), 0.0, 1e-14) << g0;
      EXPECT_NEAR(s.value(-1.0), -1.0, 1e-14);
      EXPECT_NEAR(s.value(1.0), 1.0, 1e-14);
    }
  }
}

TEST(G1FromG0, AffineInG0) {
  const auto& p = kSpearmanAddHarm3;
  const auto t = detail::affine_terms(p);
  const double slope = t.b / (1 - p.gamma_bar * p.gamma_bar);
  const double base = g1_from_g0(p, 0.0);
  EXPECT_NEAR(g1_from_g0(p, 0.2) - base, 0.2 * slope, 1e-14);
  EXPECT_NEAR(g1_from_g0(p, -0.7) - base, -0.7 * slope, 1e-14);
}

TEST(DetermineG0, SatisfiesAllInequalities) {
  for (const auto& p : {kSpearmanAddHarm3, kKendallMulIq0At3}) {
    const double g0 = determine_g0(p);
    EXPECT_GE(g0, -1.0);
    EXPECT_LE(g0, 1.0);
    for (double slack : derivative_slacks(p, g0)) EXPECT_GE(slack, -1e-10);
    const auto b = g0_bounds(p);
    // Just outside the admissible interval at least one condition fails.
    for (double outside : {b.lower - 1e-3, b.upper + 1e-3}) {
      if (outside < -1.0 || outside > 1.0) continue;
      const auto s = derivative_slacks(p, outside);
      EXPECT_LT(std::min({s[0], s[1], s[2]}), 0.0) << outside;
    }
  }
}

TEST(DetermineG0, ClosestToZero) {
  for (const auto& p : {kSpearmanAddHarm3, kKendallMulIq0At3}) {
    const auto b = g0_bounds(p);
    const double g0 = determine_g0(p);
    EXPECT_DOUBLE_EQ(g0, std::clamp(0.0, b.lower, b.upper));
  }
}

TEST(DetermineG0, EmptyIntervalIsBoundConsistency) {
  const DistributionParams p{-0.5, 0.334, 0.166};
  EXPECT_EQ(code_of([&] { g0_bounds(p); }), ErrorCode::BoundConsistency);
  EXPECT_EQ(code_of([&] { build_standardizer(p); }), ErrorCode::BoundConsistency);
}

TEST(Params, DomainChecks) {
  EXPECT_EQ(code_of([] { build_standardizer({1.0, 0.1, 0.05}); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { build_standardizer({0.0, 0.0, 0.0}); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { build_standardizer({0.0, 0.2, 0.3}); }), ErrorCode::OutOfDomain);
  EXPECT_FALSE(DistributionParams({0.5, 0.9, 0.4}).warnings().empty());
  EXPECT_TRUE(kSpearmanAddHarm3.warnings().empty());
}

TEST(Apply, Basics) {
  EXPECT_DOUBLE_EQ(Standardizer::identity()(0.37), 0.37);
  const auto s = build_standardizer(kSpearmanAddHarm3);
  EXPECT_NEAR(s(-1.0), -1.0, 1e-12);
  EXPECT_NEAR(s(1.0), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(s(kSpearmanAddHarm3.gamma_bar), s.g0);
  EXPECT_EQ(code_of([&] { s(1.5); }), ErrorCode::OutOfDomain);
  EXPECT_NEAR(s(1.0 + 1e-13), 1.0, 1e-12);
}

TEST(Apply, SeamContinuity) {
  for (const auto& p : {kSpearmanAddHarm3, kKendallMulIq0At3}) {
    const auto s = build_standardizer(p);
    const double G = p.gamma_bar;
    EXPECT_NEAR(s.value(std::nextafter(G, -2.0)), s.value(G), 1e-12);
    EXPECT_NEAR(s.derivative(std::nextafter(G, -2.0)), s.derivative(G), 1e-12);
  }
}

TEST(Apply, IdentityOnGridForSymmetricParams) {
  const auto s = build_standardizer({0.0, 0.5, 0.25});
  for (int i = 0; i <= 2000; ++i) {
    const double x = -1.0 + i / 1000.0;
    EXPECT_NEAR(s(x), x, 1e-12);
  }
}

TEST(StandardizedCoefficient, UnweightedIsRaw) {
  CounterRng rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto a = sample_permutation(30, rng), b = sample_permutation(30, rng);
    EXPECT_EQ(standardized_coefficient(CoefficientConfig::spearman(), a, b, kSpearmanAddHarm3), spearman(a, b));
    EXPECT_EQ(standardized_coefficient(CoefficientConfig::kendall(), a, b, kSpearmanAddHarm3), kendall(a, b));
  }
}

TEST(StandardizedCoefficient, PerfectAgreement) {
  const auto id = Permutation::identity(3);
  for (const auto& c : published_weighted_configs())
    EXPECT_NEAR(standardized_coefficient(c, id, id, kSpearmanAddHarm3), 1.0, 1e-12);
}

// Standardization is nondecreasing, so it never swaps the order of two raw values.
TEST(StandardizedCoefficient, PreservesOrder) {
  const auto config = published_weighted_configs()[0];
  const auto s = build_standardizer(kKendallMulIq0At3);
  CounterRng rng(6);
  const auto id = Permutation::identity(40);
  int inversions = 0;
  for (int t = 0; t < 1000; ++t) {
    const double x = evaluate(config, id, sample_permutation(40, rng));
    const double y = evaluate(config, id, sample_permutation(40, rng));
    if (std::abs(x - y) > 1e-9 && (x < y) != (s(x) < s(y))) ++inversions;
  }
  EXPECT_EQ(inversions, 0);
}

TEST(Json, RoundTrip) {
  const auto s = build_standardizer(kKendallMulIq0At3);
  EXPECT_EQ(standardizer_from_json(to_json(s)), s);
  EXPECT_EQ(code_of([] { standardizer_from_json(nlohmann::json::object()); }), ErrorCode::SchemaError);
}
