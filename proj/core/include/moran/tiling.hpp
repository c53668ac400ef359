#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moran/rational.hpp"

namespace moran {

/// Half-open interval [lo, hi).
struct HalfOpen {
  Rational lo;
  Rational hi;
  friend bool operator==(const HalfOpen&, const HalfOpen&) = default;
};

/// Finite union of half-open rational intervals, stored sorted and
/// pairwise disjoint with touching pieces merged.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  /// Empty pieces are dropped; throws std::invalid_argument when lo > hi.
  explicit IntervalUnion(std::vector<HalfOpen> pieces);

  const std::vector<HalfOpen>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  Rational total_length() const;
  IntervalUnion translated(const Rational& shift) const;
  std::string str() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<HalfOpen> intervals_;
};

/// union_{k < p1} [k t1/b1, k t1/b1 + t2/b1) for any t1, t2 >= 1.
IntervalUnion two_stage_blocks(std::int64_t p1, std::int64_t t1, std::int64_t t2, std::int64_t b1);

/// The same union written as blocks [k t c, (k t + 1) c) with c = t2/b1 and
/// t = t1/t2. Throws std::invalid_argument unless t2 | t1 and the
/// parameters are in range.
IntervalUnion two_stage_support(std::int64_t p1, std::int64_t t1, std::int64_t t2, std::int64_t b1);

struct TilingCheck {
  bool tiles = false;
  /// A point of [0, period) covered `multiplicity` times, when tiles is false.
  std::optional<Rational> point;
  std::int64_t multiplicity = 1;
  /// (total length of K) * (#digits).
  Rational covered_length;
};

/// Whether {K + d : d in digits} partitions R / (period Z) up to endpoints.
/// Exact sweep over the endpoints reduced modulo the period.
TilingCheck tiles_by_periodic_set(const IntervalUnion& K, std::span<const Rational> digits,
                                  const Rational& period);

struct TileDecision {
  bool tiles = false;
  /// Present when t2 | t1.
  std::optional<IntervalUnion> K;
  std::vector<Rational> translation_digits;
  std::optional<Rational> translation_period;
  std::optional<TilingCheck> check;
  /// t1 mod t2 when nonzero.
  std::optional<std::int64_t> residue;
};

/// Throws std::invalid_argument unless p1, p2, b1 >= 2 and t1, t2 >= 1.
TileDecision tile_decide(std::int64_t p1, std::int64_t p2, std::int64_t b1, std::int64_t t1,
                         std::int64_t t2);

}  // namespace moran
