#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coefficients.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "random.hpp"
#include "table.hpp"

namespace rankcorr::recsys {

struct RatingsRecord {
  std::int64_t user = 0;
  std::int64_t item = 0;
  int rating = 0;
  std::int64_t timestamp = 0;
};

/// 1998-03-08 00:00:00 UTC
inline constexpr std::int64_t kDefaultSplit = 889315200;

/// Whitespace separated user, item, rating, timestamp rows. Blank lines are
/// skipped.
inline std::vector<RatingsRecord> parse_ratings(std::istream& in) {
  std::vector<RatingsRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    RatingsRecord r;
    std::string extra;
    if (!(row >> r.user >> r.item >> r.rating >> r.timestamp) || (row >> extra))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 4 integer fields");
    if (r.rating < 1 || r.rating > 5)
      throw Error(ErrorCode::OutOfRangeValue, "line " + std::to_string(lineno) + ": rating outside 1..5");
    if (r.timestamp < 0)
      throw Error(ErrorCode::OutOfRangeValue, "line " + std::to_string(lineno) + ": negative timestamp");
    out.push_back(r);
  }
  return out;
}

/// Civil date "YYYY-MM-DD" to unix seconds at UTC midnight.
inline std::int64_t parse_date(const std::string& s) {
  int y = 0, m = 0, d = 0;
  char dash1 = 0, dash2 = 0;
  std::istringstream in(s);
  if (!(in >> y >> dash1 >> m >> dash2 >> d) || dash1 != '-' || dash2 != '-' || m < 1 || m > 12 ||
      d < 1 || d > 31)
    throw Error(ErrorCode::ParseError, "bad date '" + s + "', expected YYYY-MM-DD");
  // days_from_civil
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 + static_cast<unsigned>(d) - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return (era * 146097 + static_cast<std::int64_t>(doe) - 719468) * 86400;
}

/// Rankings over the items rated in both subsets, items in ascending id order.
struct Comparison {
  std::vector<std::int64_t> items;
  Permutation truth;            // mean original rating on A
  Permutation simplified_b;     // share of ratings >= 4 on B
  Permutation simplified_a;     // share of ratings >= 4 on A
  Permutation last_first;       // truth with its last item moved to the top
  std::size_t ratings_a = 0;
  std::size_t ratings_b = 0;
};

inline Comparison build_comparison(const std::vector<RatingsRecord>& records, std::int64_t split,
                                   TiePolicy ties = TiePolicy::BreakByInputOrder) {
  struct Acc {
    double sum_a = 0, ok_a = 0, count_a = 0, ok_b = 0, count_b = 0;
  };
  std::map<std::int64_t, Acc> acc;
  Comparison c{{}, Permutation::identity(1), Permutation::identity(1), Permutation::identity(1),
               Permutation::identity(1), 0, 0};
  for (const auto& r : records) {
    auto& a = acc[r.item];
    const double ok = r.rating >= 4 ? 1.0 : 0.0;
    if (r.timestamp < split) {
      a.sum_a += r.rating;
      a.ok_a += ok;
      a.count_a += 1;
      ++c.ratings_a;
    } else {
      a.ok_b += ok;
      a.count_b += 1;
      ++c.ratings_b;
    }
  }
  std::vector<double> mean_a, share_a, share_b;
  for (const auto& [item, a] : acc) {
    if (a.count_a == 0 || a.count_b == 0) continue;
    c.items.push_back(item);
    mean_a.push_back(a.sum_a / a.count_a);
    share_a.push_back(a.ok_a / a.count_a);
    share_b.push_back(a.ok_b / a.count_b);
  }
  if (c.items.size() < 2)
    throw Error(ErrorCode::InsufficientOverlap,
                std::to_string(c.items.size()) + " items rated in both subsets");
  c.truth = rank_from_scores(mean_a, true, ties);
  c.simplified_b = rank_from_scores(share_b, true, ties);
  c.simplified_a = rank_from_scores(share_a, true, ties);
  const std::size_t n = c.items.size();
  std::vector<Permutation::value_type> shifted(n);
  for (std::size_t i = 0; i < n; ++i)
    shifted[i] = c.truth[i] + 1 == n ? 0 : c.truth[i] + 1;
  c.last_first = Permutation::from_image(std::move(shifted));
  return c;
}

inline Permutation random_ranking(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  return sample_permutation(n, rng);
}

struct Row {
  std::string name;
  double raw = 0.0;
  double standardized = 0.0;
};

struct ScoreCard {
  CoefficientConfig config;
  Provenance provenance = Provenance::Identity;
  std::vector<Row> rows;  // random, simplified B, simplified A, last-first
};

inline ScoreCard score(const Comparison& c, const CoefficientConfig& config,
                       const ParameterTable& table, std::uint64_t seed) {
  const std::size_t n = c.items.size();
  const auto resolved = resolve_standardizer(table, config, n);
  ScoreCard card{config, resolved.lookup.provenance, {}};
  const std::pair<const char*, Permutation> rankings[] = {
      {"random", random_ranking(n, seed)},
      {"simplified-B", c.simplified_b},
      {"simplified-A", c.simplified_a},
      {"last-first", c.last_first},
  };
  Evaluator ev(config, n);
  for (const auto& [name, r] : rankings) {
    const double raw = ev(c.truth.image(), r.image());
    card.rows.push_back({name, raw, resolved.g(raw)});
  }
  return card;
}

}  // namespace rankcorr::recsys
