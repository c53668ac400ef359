#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "moran/measure.hpp"
#include "moran/rational.hpp"

namespace moran {

/// Brute-force cross-checks. These never consult the closed-form
/// admissibility rule or the mask zero-set formula.

using IntSet = std::vector<std::int64_t>;

/// Visits every L in [0, window) with 0 in L, #L = p, sorted ascending and
/// compatible with (b, {0..p-1}t), in lexicographic order. The visitor
/// returns false to stop early. Returns the number of sets visited.
std::size_t for_each_compatible_L(std::int64_t b, std::int64_t p, std::int64_t t,
                                  std::int64_t window,
                                  const std::function<bool(const IntSet&)>& visit);

/// All such sets (at most `limit` when limit > 0). window defaults to |b| p |t|.
std::vector<IntSet> search_compatible_L(std::int64_t b, std::int64_t p, std::int64_t t,
                                        std::optional<std::int64_t> window = std::nullopt,
                                        std::size_t limit = 0);

inline constexpr std::size_t kSpectrumSearchAtomCap = 64;
inline constexpr double kUnitarityTolerance = 1e-9;

/// Every subset of `pool` containing 0 with #atoms points whose weighted
/// exponential matrix is unitary within kUnitarityTolerance. When `stages`
/// is given, every difference must also pass the exact zero-set test of the
/// stage list. Results are sorted. Throws CapExceeded above 64 atoms.
std::vector<std::vector<Rational>> search_spectra(
    const DiscreteMeasure& measure, std::span<const Rational> pool,
    std::optional<std::span<const StagePair>> stages = std::nullopt);

using RationalMatrix = std::vector<std::vector<Rational>>;

struct WeightedAverageReport {
  Rational weighted_sum;
  /// sum_ij p_ij x_ij == 1
  bool lhs = false;
  /// sum_i x_i1 == 1 and every row of x is constant
  bool rhs = false;
  bool equivalent = false;
};

/// For a row-stochastic positive matrix p and a nonnegative x of the same
/// shape with sum_i max_j x_ij <= 1, compares the two sides exactly.
/// Throws std::invalid_argument when a constraint is violated.
WeightedAverageReport weighted_average_check(const RationalMatrix& p, const RationalMatrix& x);

}  // namespace moran
