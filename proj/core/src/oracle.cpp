#include "moran/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "moran/exactmath.hpp"
#include "moran/spectra.hpp"

namespace moran {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

// Exact vanishing of sum_j exp(2 pi i j t r / n) for every residue r mod n.
std::vector<char> vanishing_residues(std::int64_t n, std::int64_t p, std::int64_t t) {
  std::vector<char> ok(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> exps(static_cast<std::size_t>(p));
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t j = 0; j < p; ++j) {
      const __int128 e = static_cast<__int128>(j) * t % n * r % n;
      exps[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(e < 0 ? e + n : e);
    }
    ok[static_cast<std::size_t>(r)] = root_sum_is_zero(RootSum(n, exps)) ? 1 : 0;
  }
  return ok;
}

std::complex<double> transform_at(const DiscreteMeasure& measure, const Rational& xi) {
  std::complex<double> s = 0.0;
  for (const auto& [x, w] : measure.atoms()) {
    s += w.to_double() * std::polar(1.0, 2.0 * std::numbers::pi * (xi * x).frac().to_double());
  }
  return s;
}

// Exact test that sum_x w_x exp(2 pi i xi x) = 0, by expanding each atom
// into w_x N equal unit terms. nullopt when the expansion is too large.
std::optional<bool> transform_vanishes_exactly(const DiscreteMeasure& measure, const Rational& xi) {
  constexpr std::int64_t kMaxTerms = 1 << 16;
  BigInt weight_den = 1;
  BigInt order = 1;
  std::vector<Rational> phases;
  for (const auto& [x, w] : measure.atoms()) {
    weight_den = lcm(weight_den, w.den());
    phases.push_back((xi * x).frac());
    order = lcm(order, phases.back().den());
  }
  if (weight_den > kMaxTerms || order > kMaxTerms) return std::nullopt;
  const std::int64_t n = to_int64(order);
  std::vector<std::int64_t> exps;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const std::int64_t e = to_int64(phases[i].num() * (order / phases[i].den()));
    const std::int64_t copies = to_int64(measure.atoms()[i].second.num() *
                                         (weight_den / measure.atoms()[i].second.den()));
    exps.insert(exps.end(), static_cast<std::size_t>(copies), e);
  }
  return root_sum_is_zero(RootSum(n, exps));
}

}  // namespace

std::size_t for_each_compatible_L(std::int64_t b, std::int64_t p, std::int64_t t,
                                  std::int64_t window,
                                  const std::function<bool(const IntSet&)>& visit) {
  const std::int64_t n = iabs(b);
  if (n < 2 || p < 2 || t == 0) throw std::invalid_argument("for_each_compatible_L: need |b|, p >= 2 and t != 0");
  if (window < 1) return 0;
  const std::vector<char> ok = vanishing_residues(n, p, t);
  auto compatible = [&](std::int64_t d) { return ok[static_cast<std::size_t>(d % n)] != 0; };

  std::vector<std::int64_t> candidates;
  for (std::int64_t c = 1; c < window; ++c) {
    if (compatible(c)) candidates.push_back(c);
  }

  IntSet current{0};
  std::size_t visited = 0;
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<std::int64_t>(current.size()) == p) {
      ++visited;
      if (!visit(current)) stop = true;
      return;
    }
    const std::size_t need = static_cast<std::size_t>(p) - current.size();
    for (std::size_t i = from; i + need <= candidates.size() && !stop; ++i) {
      const std::int64_t c = candidates[i];
      bool fits = true;
      for (std::size_t k = 1; k < current.size() && fits; ++k) fits = compatible(c - current[k]);
      if (!fits) continue;
      current.push_back(c);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return visited;
}

std::vector<IntSet> search_compatible_L(std::int64_t b, std::int64_t p, std::int64_t t,
                                        std::optional<std::int64_t> window, std::size_t limit) {
  const std::int64_t w = window.value_or(iabs(b) * p * iabs(t));
  std::vector<IntSet> out;
  for_each_compatible_L(b, p, t, w, [&](const IntSet& L) {
    out.push_back(L);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

std::vector<std::vector<Rational>> search_spectra(const DiscreteMeasure& measure,
                                                  std::span<const Rational> pool,
                                                  std::optional<std::span<const StagePair>> stages) {
  const std::size_t n = measure.size();
  if (n > kSpectrumSearchAtomCap) {
    throw CapExceeded("search_spectra: " + std::to_string(n) + " atoms exceeds the cap of " +
                      std::to_string(kSpectrumSearchAtomCap));
  }
  std::vector<Rational> points(pool.begin(), pool.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<std::vector<Rational>> out;
  if (!std::binary_search(points.begin(), points.end(), Rational(0))) return out;
  std::erase(points, Rational(0));

  auto orthogonal = [&](const Rational& delta) {
    if (std::abs(transform_at(measure, delta)) > 1e-6) return false;
    if (const auto exact = transform_vanishes_exactly(measure, delta); exact && !*exact) return false;
    if (stages && !zero_set_stage(*stages, delta)) return false;
    return true;
  };

  std::vector<Rational> current{Rational(0)};
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (current.size() == n) {
      if (gram_residual(measure, current) < kUnitarityTolerance) out.push_back(current);
      return;
    }
    for (std::size_t i = from; i + (n - current.size()) <= points.size(); ++i) {
      bool fits = true;
      for (std::size_t k = 0; k < current.size() && fits; ++k) fits = orthogonal(points[i] - current[k]);
      if (!fits) continue;
      current.push_back(points[i]);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

WeightedAverageReport weighted_average_check(const RationalMatrix& p, const RationalMatrix& x) {
  if (p.empty() || p.size() != x.size()) throw std::invalid_argument("weighted_average_check: shape mismatch");
  const std::size_t cols = p.front().size();
  if (cols == 0) throw std::invalid_argument("weighted_average_check: empty rows");
  Rational max_sum;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].size() != cols || x[i].size() != cols) {
      throw std::invalid_argument("weighted_average_check: ragged matrix");
    }
    Rational row;
    Rational row_max = x[i][0];
    for (std::size_t j = 0; j < cols; ++j) {
      if (p[i][j].sign() <= 0) throw std::invalid_argument("weighted_average_check: p must be positive");
      if (x[i][j].sign() < 0) throw std::invalid_argument("weighted_average_check: x must be nonnegative");
      row += p[i][j];
      row_max = std::max(row_max, x[i][j]);
    }
    if (row != Rational(1)) throw std::invalid_argument("weighted_average_check: rows of p must sum to 1");
    max_sum += row_max;
  }
  if (Rational(1) < max_sum) throw std::invalid_argument("weighted_average_check: sum of row maxima exceeds 1");

  WeightedAverageReport r;
  Rational first_col;
  bool constant_rows = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    first_col += x[i][0];
    for (std::size_t j = 0; j < cols; ++j) {
      r.weighted_sum += p[i][j] * x[i][j];
      constant_rows = constant_rows && x[i][j] == x[i][0];
    }
  }
  r.lhs = r.weighted_sum == Rational(1);
  r.rhs = first_col == Rational(1) && constant_rows;
  r.equivalent = r.lhs == r.rhs;
  return r;
}

}  // namespace moran
