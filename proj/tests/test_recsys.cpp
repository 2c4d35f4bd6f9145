#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "rankcorr/bundled_table.hpp"
#include "rankcorr/recsys.hpp"

using namespace rankcorr;
using namespace rankcorr::recsys;

namespace {

std::vector<RatingsRecord> synthetic() {
  std::ifstream in(std::string(RANKCORR_TEST_DATA) + "/ratings_synthetic.data");
  return parse_ratings(in);
}

}  // namespace

TEST(Parse, Layout) {
  std::istringstream in("196\t242\t3\t881250949\n\n186 302 3 891717742\n");
  const auto r = parse_ratings(in);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].user, 196);
  EXPECT_EQ(r[0].item, 242);
  EXPECT_EQ(r[0].rating, 3);
  EXPECT_EQ(r[0].timestamp, 881250949);
}

TEST(Parse, Errors) {
  std::istringstream short_row("1 2 3\n");
  EXPECT_THROW(parse_ratings(short_row), Error);
  std::istringstream extra("1 2 3 4 5\n");
  EXPECT_THROW(parse_ratings(extra), Error);
  std::istringstream bad_rating("1 2 6 100\n");
  EXPECT_THROW(parse_ratings(bad_rating), Error);
  std::istringstream text("a b c d\n");
  EXPECT_THROW(parse_ratings(text), Error);
}

TEST(Dates, UtcMidnight) {
  EXPECT_EQ(parse_date("1998-03-08"), kDefaultSplit);
  EXPECT_EQ(parse_date("1970-01-01"), 0);
  EXPECT_EQ(parse_date("2000-03-01"), 951868800);
  EXPECT_THROW(parse_date("1998/03/08"), Error);
}

TEST(Comparison, IntersectionAndPerturbation) {
  // Item 3 only in A, item 4 only in B.
  std::istringstream in(
      "1 1 5 100\n2 1 4 100\n1 2 2 100\n1 3 5 100\n"
      "3 1 5 900\n3 2 4 900\n3 4 1 900\n");
  const auto c = build_comparison(parse_ratings(in), 500);
  ASSERT_EQ(c.items, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(c.ratings_a, 4u);
  EXPECT_EQ(c.ratings_b, 3u);
  EXPECT_EQ(c.truth[0], 0u);
  EXPECT_EQ(c.truth[1], 1u);
  EXPECT_EQ(c.last_first[0], 1u);
  EXPECT_EQ(c.last_first[1], 0u);
  std::istringstream none("1 1 5 100\n1 2 5 900\n");
  EXPECT_THROW(build_comparison(parse_ratings(none), 500), Error);
}

TEST(Comparison, TiesPolicy) {
  std::istringstream in("1 1 4 100\n1 2 4 100\n1 1 3 900\n1 2 5 900\n");
  const auto records = parse_ratings(in);
  const auto c = build_comparison(records, 500);
  EXPECT_EQ(c.truth[0], 0u);  // equal means: lower item id first
  EXPECT_THROW(build_comparison(records, 500, TiePolicy::Reject), Error);
}

std::vector<CoefficientConfig> table_two_weighted() {
  std::vector<CoefficientConfig> out;
  for (auto k : {CoefficientKind::Spearman, CoefficientKind::Kendall})
    for (auto f : {WeightFunction::harmonic(), WeightFunction::inverse_quadratic(1)})
      out.push_back(CoefficientConfig::weighted(k, f, WeightScheme::Additive));
  return out;
}

TEST(Score, SyntheticHarness) {
  const auto c = build_comparison(synthetic(), kDefaultSplit);
  const std::size_t n = c.items.size();
  ASSERT_GE(n, 600u);
  const auto& table = bundled_table();
  const auto sp = score(c, CoefficientConfig::spearman(), table, 1);
  ASSERT_EQ(sp.rows.size(), 4u);
  EXPECT_EQ(sp.rows[3].name, "last-first");
  // Moving the last of n items to the top: sum d^2 = n(n-1).
  EXPECT_NEAR(sp.rows[3].raw, 1.0 - 6.0 / (n + 1.0), 1e-12);
  EXPECT_GT(sp.rows[3].raw, 0.99);
  EXPECT_EQ(sp.rows[3].raw, sp.rows[3].standardized);
  EXPECT_GT(score(c, CoefficientConfig::kendall(), table, 1).rows[3].raw, 0.99);
  // Top-weighted coefficients punish the misplaced top item.
  for (const auto& config : table_two_weighted())
    EXPECT_LT(score(c, config, table, 1).rows[3].raw, 0.85) << to_string(config);
}

TEST(Score, IdenticalRankingIsOne) {
  const auto c = build_comparison(synthetic(), kDefaultSplit);
  for (const auto& config : published_weighted_configs())
    EXPECT_NEAR(evaluate(config, c.truth, c.truth), 1.0, 1e-12);
}

TEST(Score, StandardizedRandomBaselineCentred) {
  const auto c = build_comparison(synthetic(), kDefaultSplit);
  for (const auto& config : table_two_weighted()) {
    double raw = 0, standardized = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto row = score(c, config, bundled_table(), seed).rows[0];
      raw += row.raw / 20.0;
      standardized += row.standardized / 20.0;
    }
    EXPECT_LT(std::abs(standardized), 0.05) << to_string(config);
    EXPECT_LT(raw, -0.2) << to_string(config);
  }
}
