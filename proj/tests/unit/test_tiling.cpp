#include <random>

#include "doctest.h"
#include "moran/classifier.hpp"
#include "moran/tiling.hpp"

using namespace moran;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Counts how often the midpoint of each cell of a grid with spacing 1/den is
// covered by K + digits modulo period. den must make every endpoint a grid
// point.
std::vector<std::int64_t> grid_coverage(const IntervalUnion& K, const std::vector<Rational>& digits,
                                        const Rational& period, std::int64_t den) {
  const std::int64_t cells = to_int64((period * Rational(den)).floor());
  std::vector<std::int64_t> count(static_cast<std::size_t>(cells), 0);
  for (std::int64_t c = 0; c < cells; ++c) {
    const Rational x = R(2 * c + 1, 2 * den);
    for (const Rational& d : digits) {
      for (const HalfOpen& h : K.intervals()) {
        // x + n period in [h.lo + d, h.hi + d) for some integer n
        const Rational lo = h.lo + d;
        const Rational hi = h.hi + d;
        BigInt n = ((lo - x) / period).floor();
        for (Rational y = x + Rational(n) * period; y < hi; y += period) {
          if (lo <= y) ++count[static_cast<std::size_t>(c)];
        }
      }
    }
  }
  return count;
}

bool grid_tiles(const IntervalUnion& K, const std::vector<Rational>& digits, const Rational& period,
                std::int64_t den) {
  for (std::int64_t v : grid_coverage(K, digits, period, den)) {
    if (v != 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("tiling") {

TEST_CASE("interval unions") {
  const IntervalUnion u({{R(1, 2), R(3, 4)}, {R(0), R(1, 4)}, {R(1), R(1)}});
  CHECK(u.str() == "[0, 1/4) u [1/2, 3/4)");
  CHECK(u.total_length() == R(1, 2));
  CHECK(IntervalUnion({{R(0), R(1)}, {R(1), R(2)}}).intervals().size() == 1);
  CHECK(IntervalUnion({{R(0), R(3, 2)}, {R(1), R(2)}}).str() == "[0, 2)");
  CHECK(IntervalUnion().str() == "{}");
  CHECK(u.translated(R(1)).str() == "[1, 5/4) u [3/2, 7/4)");
  CHECK_THROWS_AS(IntervalUnion({{R(1), R(0)}}), std::invalid_argument);
}

TEST_CASE("two-stage support") {
  const IntervalUnion K = two_stage_support(3, 6, 2, 6);
  CHECK(K.str() == "[0, 1/3) u [1, 4/3) u [2, 7/3)");
  CHECK(K == two_stage_blocks(3, 6, 2, 6));
  CHECK_THROWS(two_stage_support(3, 5, 2, 6));
  // Overlapping blocks merge into one interval.
  CHECK(two_stage_blocks(2, 1, 3, 4).str() == "[0, 1)");
}

TEST_CASE("periodic tiling examples") {
  const IntervalUnion K({{R(0), R(1)}, {R(2), R(3)}});
  const std::vector<Rational> two{R(0), R(1)};
  const auto yes = tiles_by_periodic_set(K, two, R(4));
  CHECK(yes.tiles);
  CHECK(yes.covered_length == R(4));
  const std::vector<Rational> one{R(0)};
  const auto no = tiles_by_periodic_set(K, one, R(2));
  CHECK_FALSE(no.tiles);
  REQUIRE(no.point);
  CHECK(no.multiplicity == 2);
  // A piece longer than the period covers everything at least once.
  const auto wide = tiles_by_periodic_set(IntervalUnion({{R(0), R(5, 2)}}), one, R(1));
  CHECK_FALSE(wide.tiles);
  CHECK(wide.multiplicity >= 2);
  CHECK(tiles_by_periodic_set(IntervalUnion({{R(1, 2), R(3, 2)}}), one, R(1)).tiles);
  CHECK_THROWS(tiles_by_periodic_set(K, one, R(0)));
}

TEST_CASE("two-letter family tiles exactly when t2 divides t1") {
  for (std::int64_t p1 = 2; p1 <= 5; ++p1)
    for (std::int64_t p2 = 2; p2 <= 5; ++p2)
      for (std::int64_t b1 = 2; b1 <= 8; ++b1)
        for (std::int64_t t1 = 1; t1 <= 6; ++t1)
          for (std::int64_t t2 = 1; t2 <= 6; ++t2) {
            const TileDecision d = tile_decide(p1, p2, b1, t1, t2);
            CHECK(d.tiles == (t1 % t2 == 0));
            if (!d.tiles) {
              CHECK(d.residue == t1 % t2);
              CHECK_FALSE(d.K);
              continue;
            }
            REQUIRE(d.K);
            REQUIRE(d.translation_period);
            CHECK(d.translation_digits.size() == static_cast<std::size_t>(t1 / t2));
            CHECK(grid_tiles(*d.K, d.translation_digits, *d.translation_period, b1));
            CHECK(d.check->covered_length == *d.translation_period);
            const auto flags = two_stage_decide(p1, p2, b1, t1, t2);
            CHECK(flags.tiling_verified);
          }
}

TEST_CASE("overlapping blocks form one interval") {
  for (std::int64_t p1 = 2; p1 <= 5; ++p1)
    for (std::int64_t t1 = 1; t1 <= 6; ++t1)
      for (std::int64_t t2 = t1; t2 <= 7; ++t2) {
        const IntervalUnion u = two_stage_blocks(p1, t1, t2, 5);
        REQUIRE(u.intervals().size() == 1);
        CHECK(u.intervals()[0].hi == R((p1 - 1) * t1 + t2, 5));
        CHECK(two_stage_decide(p1, 2, 5, t1, t2).support_is_single_interval);
      }
}

TEST_CASE("exact sweep agrees with grid coverage") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 4);
    std::vector<HalfOpen> pieces(1 + rng() % 3);
    for (auto& h : pieces) {
      const std::int64_t lo = static_cast<std::int64_t>(rng() % 13) - 4;
      h = {R(lo, den), R(lo + 1 + static_cast<std::int64_t>(rng() % 5), den)};
    }
    const IntervalUnion K(pieces);
    std::vector<Rational> digits(1 + rng() % 3);
    for (auto& d : digits) d = R(static_cast<std::int64_t>(rng() % 17) - 8, den);
    const Rational period = R(1 + static_cast<std::int64_t>(rng() % 12), den);
    const auto check = tiles_by_periodic_set(K, digits, period);
    const auto coverage = grid_coverage(K, digits, period, den);
    bool all_one = true;
    for (auto v : coverage) all_one = all_one && v == 1;
    CHECK(check.tiles == all_one);
    if (check.tiles) CHECK(check.covered_length == period);
    if (!check.tiles) {
      REQUIRE(check.point);
      const std::int64_t cell = to_int64((*check.point * Rational(den)).floor());
      CHECK(coverage[static_cast<std::size_t>(cell)] == check.multiplicity);
    }
  }
}

TEST_CASE("tiling is invariant under translation") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t p1 = 2 + static_cast<std::int64_t>(rng() % 4);
    const std::int64_t b1 = 2 + static_cast<std::int64_t>(rng() % 7);
    const std::int64_t t2 = 1 + static_cast<std::int64_t>(rng() % 4);
    const std::int64_t t1 = t2 * (1 + static_cast<std::int64_t>(rng() % 4)) + static_cast<std::int64_t>(rng() % 2);
    const IntervalUnion K = two_stage_blocks(p1, t1, t2, b1);
    const Rational c = R(t2, b1);
    std::vector<Rational> digits;
    for (std::int64_t i = 0; i < std::max<std::int64_t>(t1 / t2, 1); ++i) digits.push_back(Rational(i) * c);
    const Rational period = Rational(std::max<std::int64_t>(t1 / t2, 1) * p1) * c;
    const bool base = tiles_by_periodic_set(K, digits, period).tiles;
    const Rational shift = R(static_cast<std::int64_t>(rng() % 41) - 20, 1 + static_cast<std::int64_t>(rng() % 9));
    CHECK(tiles_by_periodic_set(K.translated(shift), digits, period).tiles == base);
    std::vector<Rational> rotated;
    for (const auto& d : digits) rotated.push_back(d + shift);
    CHECK(tiles_by_periodic_set(K, rotated, period).tiles == base);
    CHECK(K.translated(shift).total_length() == K.total_length());
  }
}

}
