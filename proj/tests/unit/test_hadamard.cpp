#include <cmath>
#include <random>

#include "doctest.h"
#include "moran/hadamard.hpp"
#include "moran/oracle.hpp"

using namespace moran;

namespace {
std::vector<std::int64_t> progression(std::int64_t p, std::int64_t t) {
  std::vector<std::int64_t> d;
  for (std::int64_t j = 0; j < p; ++j) d.push_back(j * t);
  return d;
}
}  // namespace

TEST_SUITE("hadamard") {

TEST_CASE("admissibility examples") {
  CHECK(is_admissible(4, 2, 1));
  CHECK(is_admissible(2, 2, 3));
  CHECK_FALSE(is_admissible(6, 4, 2));
  CHECK(is_admissible(-4, 2, 1));
  CHECK(is_admissible(6, 3, -4));
  CHECK_FALSE(is_admissible(2, 3, 4));
  CHECK_FALSE(is_admissible(1, 2, 1));
}

TEST_CASE("canonical digit sets") {
  CHECK(canonical_L(12, 2, 1) == std::vector<std::int64_t>{0, 6});
  CHECK(canonical_L(2, 2, 3) == std::vector<std::int64_t>{0, 1});
  CHECK(canonical_L(6, 3, 1) == std::vector<std::int64_t>{0, 2, 4});
  CHECK(canonical_L(-4, 2, 1) == std::vector<std::int64_t>{0, 2});
  CHECK_THROWS_AS(canonical_L(6, 4, 2), std::invalid_argument);
}

TEST_CASE("compatible pairs") {
  const std::vector<std::int64_t> D{0, 1};
  CHECK(is_compatible_pair(4, D, std::vector<std::int64_t>{0, 2}));
  CHECK_FALSE(is_compatible_pair(4, D, std::vector<std::int64_t>{0, 1}));
  CHECK(is_compatible_pair(2, std::vector<std::int64_t>{0, 3}, std::vector<std::int64_t>{0, 1}));
  CHECK_FALSE(is_compatible_pair(4, D, std::vector<std::int64_t>{2, 2}));
  CHECK_THROWS_AS(is_compatible_pair(4, D, std::vector<std::int64_t>{0}), std::invalid_argument);
  // Digit set that is not a progression.
  const std::vector<std::int64_t> D4{0, 1, 8, 9};
  const std::vector<std::int64_t> L4{0, 2, 4, 6};
  CHECK(is_compatible_pair(16, D4, L4) == (unitarity_residual(16, D4, L4) < 1e-9));
}

TEST_CASE("unitarity residual and Parseval sums") {
  const std::vector<std::int64_t> D{0, 1};
  CHECK(unitarity_residual(4, D, std::vector<std::int64_t>{0, 2}) < 1e-12);
  CHECK(unitarity_residual(4, D, std::vector<std::int64_t>{0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(unitarity_residual(5, std::vector<std::int64_t>{3}, std::vector<std::int64_t>{7}) < 1e-15);
  CHECK(parseval_check(4, D, std::vector<std::int64_t>{0, 2}, 0.3) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(parseval_check(4, D, std::vector<std::int64_t>{0, 2}, 0.0) == doctest::Approx(1.0));
  CHECK(parseval_check(4, D, std::vector<std::int64_t>{0, 1}, 0.0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("triple report") {
  const auto r = check_triple(6, progression(3, 1), std::vector<std::int64_t>{0, 2, 4});
  CHECK(r.exact_compatible);
  CHECK(r.unitarity_residual < 1e-9);
  CHECK(r.canonical_L == std::vector<std::int64_t>{0, 2, 4});
  CHECK_FALSE(check_triple(6, std::vector<std::int64_t>{0, 1, 5}, std::vector<std::int64_t>{0, 2, 4}).canonical_L);
}

TEST_CASE("exact, unitary and Parseval views agree") {
  std::mt19937 rng(1);
  int agreed = 0;
  for (std::int64_t b = -12; b <= 12; ++b) {
    if (std::llabs(b) < 2) continue;
    for (std::int64_t p = 2; p <= 6; ++p) {
      for (std::int64_t t = -6; t <= 6; ++t) {
        if (t == 0) continue;
        const auto D = progression(p, t);
        std::vector<std::vector<std::int64_t>> candidates;
        if (is_admissible(b, p, t)) candidates.push_back(canonical_L(b, p, t));
        for (auto& L : search_compatible_L(b, p, t, std::llabs(b) * 2, 3)) candidates.push_back(L);
        // A random non-candidate too.
        std::vector<std::int64_t> R{0};
        while (static_cast<std::int64_t>(R.size()) < p) {
          const std::int64_t v = 1 + static_cast<std::int64_t>(rng() % 40);
          if (std::find(R.begin(), R.end(), v) == R.end()) R.push_back(v);
        }
        candidates.push_back(R);
        for (const auto& L : candidates) {
          const bool exact = is_compatible_pair(b, D, L);
          CHECK(exact == (unitarity_residual(b, D, L) < 1e-9));
          bool parseval = true;
          for (int i = 0; i < 16; ++i) {
            const double x = std::uniform_real_distribution<double>(-3, 3)(rng);
            parseval = parseval && std::abs(parseval_check(b, D, L, x) - 1.0) < 1e-9;
          }
          CHECK(exact == parseval);
          ++agreed;
        }
      }
    }
  }
  CHECK(agreed > 1000);
}

TEST_CASE("translation invariance") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 11);
    const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 3);
    std::vector<std::int64_t> D, L;
    for (std::int64_t j = 0; j < p; ++j) {
      D.push_back(static_cast<std::int64_t>(rng() % 20));
      L.push_back(static_cast<std::int64_t>(rng() % 20));
    }
    const bool base = is_compatible_pair(b, D, L);
    const std::int64_t c = static_cast<std::int64_t>(rng() % 50) - 25, c2 = static_cast<std::int64_t>(rng() % 50) - 25;
    for (auto& d : D) d += c;
    for (auto& l : L) l += c2;
    CHECK(is_compatible_pair(b, D, L) == base);
  }
}

}
