#include "moran/hadamard.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "moran/exactmath.hpp"

namespace moran {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

// 2 pi (num mod den) / den, reduced exactly before conversion.
double phase(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
}

std::optional<std::int64_t> progression_step(std::span<const std::int64_t> D) {
  if (D.size() < 2 || D[0] != 0) return std::nullopt;
  const std::int64_t t = D[1];
  for (std::size_t j = 0; j < D.size(); ++j) {
    if (D[j] != static_cast<std::int64_t>(j) * t) return std::nullopt;
  }
  return t == 0 ? std::nullopt : std::optional<std::int64_t>(t);
}

}  // namespace

bool is_admissible(std::int64_t b, std::int64_t p, std::int64_t t) {
  if (iabs(b) < 2 || p < 2 || t == 0) return false;
  const std::int64_t reduced = iabs(b) / gcd(b, t);
  return reduced % p == 0;
}

std::vector<std::int64_t> canonical_L(std::int64_t b, std::int64_t p, std::int64_t t) {
  if (!is_admissible(b, p, t)) {
    throw std::invalid_argument("canonical_L: (b=" + std::to_string(b) + ", p=" +
                                std::to_string(p) + ", t=" + std::to_string(t) +
                                ") is not admissible");
  }
  // b t' / (t p) with t' = t / gcd(b, t) reduces to b / (gcd(b, t) p).
  const std::int64_t unit = iabs(b) / (gcd(b, t) * p);
  std::vector<std::int64_t> L(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) L[static_cast<std::size_t>(j)] = unit * j;
  return L;
}

bool difference_is_orthogonal(std::int64_t b, std::span<const std::int64_t> D,
                              std::int64_t delta) {
  const std::int64_t n = iabs(b);
  std::vector<std::int64_t> exps;
  exps.reserve(D.size());
  const std::int64_t dm = delta % n;
  for (const std::int64_t d : D) {
    // d * delta mod n without overflow for desk-scale inputs.
    const std::int64_t e = static_cast<std::int64_t>((static_cast<__int128>(d % n) * dm) % n);
    // Conjugation (b < 0) does not change whether the sum vanishes.
    exps.push_back(e);
  }
  return root_sum_is_zero(RootSum(n, exps));
}

bool is_compatible_pair(std::int64_t b, std::span<const std::int64_t> D,
                        std::span<const std::int64_t> L) {
  if (D.empty() || D.size() != L.size()) {
    throw std::invalid_argument("is_compatible_pair: #D and #L must agree and be >= 1");
  }
  if (iabs(b) < 2) throw std::invalid_argument("is_compatible_pair: |b| must be >= 2");
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      if (L[i] == L[j]) return false;
      if (!difference_is_orthogonal(b, D, L[i] - L[j])) return false;
    }
  }
  return true;
}

double unitarity_residual(std::int64_t b, std::span<const std::int64_t> D,
                          std::span<const std::int64_t> L) {
  if (D.size() != L.size()) throw std::invalid_argument("unitarity_residual: size mismatch");
  const std::size_t n = D.size();
  const std::int64_t den = iabs(b);
  const double sign = b < 0 ? -1.0 : 1.0;
  std::vector<std::complex<double>> H(n * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto num = static_cast<std::int64_t>(
          (static_cast<__int128>(D[i] % den) * (L[j] % den)) % den);
      H[i * n + j] = std::polar(scale, sign * phase(num, den));
    }
  }
  double sq = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      std::complex<double> g = 0.0;
      for (std::size_t i = 0; i < n; ++i) g += std::conj(H[i * n + a]) * H[i * n + c];
      if (a == c) g -= 1.0;
      sq += std::norm(g);
    }
  }
  return std::sqrt(sq);
}

double parseval_check(std::int64_t b, std::span<const std::int64_t> D,
                      std::span<const std::int64_t> L, double x) {
  if (D.empty()) throw std::invalid_argument("parseval_check: empty digit set");
  double total = 0.0;
  for (const std::int64_t l : L) {
    const double y = static_cast<double>(l) / static_cast<double>(b) + x;
    std::complex<double> m = 0.0;
    for (const std::int64_t d : D) {
      m += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(d) * y);
    }
    total += std::norm(m / static_cast<double>(D.size()));
  }
  return total;
}

TripleCheckReport check_triple(std::int64_t b, std::span<const std::int64_t> D,
                               std::span<const std::int64_t> L) {
  TripleCheckReport report;
  report.exact_compatible = is_compatible_pair(b, D, L);
  report.unitarity_residual = unitarity_residual(b, D, L);
  if (const auto t = progression_step(D)) {
    const auto p = static_cast<std::int64_t>(D.size());
    if (is_admissible(b, p, *t)) report.canonical_L = canonical_L(b, p, *t);
  }
  return report;
}

}  // namespace moran
