#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "random.hpp"

namespace rankcorr {

/// Largest length for which full enumeration of all n! permutations is offered.
inline constexpr std::size_t kMaxExactLength = 10;

/// A bijection on {0, ..., n-1}. Rankings are stored the same way: image[i] is
/// the 0-based rank of item i.
class Permutation {
 public:
  using value_type = std::uint32_t;

  /// Validates that `image` is a 0-based bijection.
  static Permutation from_image(std::vector<value_type> image) {
    if (image.empty()) throw Error(ErrorCode::EmptyInput, "permutation of length 0");
    std::vector<bool> seen(image.size(), false);
    for (auto v : image) {
      if (v >= image.size()) {
        throw Error(ErrorCode::OutOfRangeValue,
                    "value " + std::to_string(v) + " outside 0.." + std::to_string(image.size() - 1));
      }
      if (seen[v]) throw Error(ErrorCode::DuplicateValue, "value " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
    return Permutation(std::move(image));
  }

  static Permutation identity(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptyInput, "permutation of length 0");
    std::vector<value_type> image(n);
    std::iota(image.begin(), image.end(), value_type{0});
    return Permutation(std::move(image));
  }

  /// i -> n-1-i
  static Permutation reversal(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::EmptyInput, "permutation of length 0");
    std::vector<value_type> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<value_type>(n - 1 - i);
    return Permutation(std::move(image));
  }

  [[nodiscard]] std::size_t size() const noexcept { return image_.size(); }
  [[nodiscard]] value_type operator[](std::size_t i) const noexcept { return image_[i]; }
  [[nodiscard]] std::span<const value_type> image() const noexcept { return image_; }
  [[nodiscard]] bool is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<value_type> image) : image_(std::move(image)) {}

  std::vector<value_type> image_;
};

enum class TiePolicy { Reject, BreakByInputOrder };

/// Accepts a permutation of {0..n-1} or of {1..n}. Input containing a 0 is
/// read as 0-based, otherwise as 1-based.
inline Permutation validate_ranking(std::span<const long long> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "empty ranking");
  const bool zero_based = std::find(values.begin(), values.end(), 0LL) != values.end();
  const long long offset = zero_based ? 0 : 1;
  const auto n = static_cast<long long>(values.size());
  std::vector<Permutation::value_type> image;
  image.reserve(values.size());
  std::vector<bool> seen(values.size(), false);
  for (long long v : values) {
    const long long r = v - offset;
    if (r < 0 || r >= n) {
      throw Error(ErrorCode::OutOfRangeValue,
                  "rank " + std::to_string(v) + " outside " + std::to_string(offset) + ".." +
                      std::to_string(n - 1 + offset));
    }
    if (seen[static_cast<std::size_t>(r)]) {
      throw Error(ErrorCode::DuplicateValue, "rank " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(r)] = true;
    image.push_back(static_cast<Permutation::value_type>(r));
  }
  return Permutation::from_image(std::move(image));
}

inline Permutation validate_ranking(std::initializer_list<long long> values) {
  return validate_ranking(std::span<const long long>(values.begin(), values.size()));
}

/// Position i receives the 0-based order statistic of scores[i]. Equal scores
/// are either rejected or ordered by first occurrence.
inline Permutation rank_from_scores(std::span<const double> scores, bool descending,
                                    TiePolicy ties) {
  if (scores.empty()) throw Error(ErrorCode::EmptyInput, "no scores");
  for (double s : scores)
    if (std::isnan(s)) throw Error(ErrorCode::OutOfRangeValue, "NaN score");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return descending ? scores[l] > scores[r] : scores[l] < scores[r];
  });
  std::vector<Permutation::value_type> image(scores.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (ties == TiePolicy::Reject && pos > 0 && scores[order[pos]] == scores[order[pos - 1]]) {
      throw Error(ErrorCode::TiesPresent, "items " + std::to_string(order[pos - 1]) + " and " +
                                              std::to_string(order[pos]) + " share a score");
    }
    image[order[pos]] = static_cast<Permutation::value_type>(pos);
  }
  return Permutation::from_image(std::move(image));
}

inline Permutation invert(const Permutation& p) {
  std::vector<Permutation::value_type> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Permutation::value_type>(i);
  return Permutation::from_image(std::move(inv));
}

/// r[i] = p[q[i]]
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
  std::vector<Permutation::value_type> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return Permutation::from_image(std::move(r));
}

/// The single permutation pi with Γ(a, b) = Γ(identity, pi): the b-ranks of
/// the items listed in a-rank order, pi[k] = b[a^-1[k]].
inline Permutation relative_permutation(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  return compose(b, invert(a));
}

// ---------------------------------------------------------------------------
// Enumeration in lexicographic order, indexed through the factorial number
// system so that any index range can be decoded independently.

inline std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw Error(ErrorCode::TooLarge, std::to_string(n) + "! overflows 64 bits");
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

inline void check_enumerable(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "length 0");
  if (n > kMaxExactLength) {
    throw Error(ErrorCode::TooLarge, "enumeration limited to n <= " +
                                         std::to_string(kMaxExactLength) + ", got " +
                                         std::to_string(n));
  }
}

/// Writes the index-th permutation (lexicographic, 0-based) of length out.size().
inline void unrank_into(std::uint64_t index, std::span<Permutation::value_type> out) {
  const std::size_t n = out.size();
  std::vector<Permutation::value_type> pool(n);
  std::iota(pool.begin(), pool.end(), Permutation::value_type{0});
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto digit = static_cast<std::size_t>(index / f);
    index %= f;
    out[i] = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
}

inline Permutation unrank_permutation(std::size_t n, std::uint64_t index) {
  check_enumerable(n);
  if (index >= factorial(n)) throw Error(ErrorCode::OutOfRangeValue, "index beyond n!");
  std::vector<Permutation::value_type> image(n);
  unrank_into(index, image);
  return Permutation::from_image(std::move(image));
}

inline std::uint64_t rank_permutation(const Permutation& p) {
  const std::size_t n = p.size();
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller_after;
    index += smaller_after * factorial(n - 1 - i);
  }
  return index;
}

/// Calls fn(image, index) for every permutation with index in [first, last).
/// The span passed to fn is only valid during the call.
template <typename Fn>
void for_each_permutation(std::size_t n, std::uint64_t first, std::uint64_t last, Fn&& fn) {
  check_enumerable(n);
  last = std::min(last, factorial(n));
  if (first >= last) return;
  std::vector<Permutation::value_type> work(n);
  unrank_into(first, work);
  for (std::uint64_t index = first; index < last; ++index) {
    fn(std::span<const Permutation::value_type>(work), index);
    std::next_permutation(work.begin(), work.end());
  }
}

/// All n! permutations in lexicographic order.
inline std::vector<Permutation> enumerate_permutations(std::size_t n) {
  check_enumerable(n);
  std::vector<Permutation> all;
  all.reserve(static_cast<std::size_t>(factorial(n)));
  for_each_permutation(n, 0, factorial(n), [&](auto image, std::uint64_t) {
    all.push_back(Permutation::from_image({image.begin(), image.end()}));
  });
  return all;
}

// ---------------------------------------------------------------------------
// Uniform sampling

/// In-place Fisher-Yates over an identity-initialised buffer.
inline void sample_into(std::span<Permutation::value_type> out, CounterRng& rng) {
  std::iota(out.begin(), out.end(), Permutation::value_type{0});
  for (std::size_t i = out.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(out[i - 1], out[j]);
  }
}

inline Permutation sample_permutation(std::size_t n, CounterRng& rng) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "length 0");
  std::vector<Permutation::value_type> image(n);
  sample_into(image, rng);
  return Permutation::from_image(std::move(image));
}

}  // namespace rankcorr
