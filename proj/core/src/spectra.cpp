#include "moran/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "moran/hadamard.hpp"

namespace moran {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

std::complex<double> unit_phase(const Rational& r) {
  return std::polar(1.0, 2.0 * std::numbers::pi * r.frac().to_double());
}

}  // namespace

// -------------------------------------------------------- SpectrumCandidate

SpectrumCandidate SpectrumCandidate::finite(std::vector<Rational> points) {
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("SpectrumCandidate: repeated point");
  }
  SpectrumCandidate s;
  s.points_ = std::move(points);
  return s;
}

SpectrumCandidate SpectrumCandidate::structured(std::vector<Rational> digits, Rational period) {
  if (period.sign() <= 0) throw std::invalid_argument("SpectrumCandidate: period must be > 0");
  for (Rational& d : digits) d = (d / period).frac() * period;
  std::sort(digits.begin(), digits.end());
  if (std::adjacent_find(digits.begin(), digits.end()) != digits.end()) {
    throw std::invalid_argument("SpectrumCandidate: digits repeat modulo the period");
  }
  SpectrumCandidate s;
  s.points_ = std::move(digits);
  s.period_ = std::move(period);
  return s;
}

std::vector<Rational> SpectrumCandidate::enumerate(std::int64_t window) const {
  if (is_finite()) return points_;
  std::vector<Rational> out;
  out.reserve(points_.size() * static_cast<std::size_t>(2 * window + 1));
  for (std::int64_t z = -window; z <= window; ++z) {
    const Rational shift = *period_ * Rational(z);
    for (const Rational& d : points_) out.push_back(d + shift);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ towers

SpectrumCandidate build_tower_spectrum(std::span<const StagePair> stages) {
  std::vector<BigInt> points{0};
  BigInt B = 1;
  for (std::size_t j = 0; j < stages.size(); ++j) {
    const StagePair& s = stages[j];
    if (!is_admissible(s.b, s.p, s.t)) {
      throw std::invalid_argument("build_tower_spectrum: stage " + std::to_string(j + 1) + " " +
                                  s.str() + " is not admissible");
    }
    const auto L = canonical_L(s.b, s.p, s.t);
    std::vector<BigInt> next;
    next.reserve(points.size() * L.size());
    for (const BigInt& x : points) {
      for (const std::int64_t l : L) next.push_back(x + B * l);
    }
    points = std::move(next);
    B *= s.b;
  }
  std::sort(points.begin(), points.end());
  if (const auto dup = std::adjacent_find(points.begin(), points.end()); dup != points.end()) {
    throw DegenerateTower("build_tower_spectrum: point " + dup->str() + " repeats");
  }
  std::vector<Rational> rational(points.begin(), points.end());
  return SpectrumCandidate::finite(std::move(rational));
}

SpectrumCandidate build_tower_spectrum(const SystemConfig& config, const SymbolicWord& word,
                                       std::size_t k) {
  word.check_alphabet(config.size());
  const auto stages = stage_prefix(config, word, k);
  return build_tower_spectrum(std::span<const StagePair>(stages));
}

// ------------------------------------------------------------ verification

double gram_residual(const DiscreteMeasure& measure, std::span<const Rational> points) {
  const std::size_t n = points.size();
  const std::size_t m = measure.size();
  std::vector<std::complex<double>> E(n * m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < m; ++x) {
      const auto& [point, weight] = measure.atoms()[x];
      E[a * m + x] = std::sqrt(weight.to_double()) * unit_phase(points[a] * point);
    }
  }
  double sq = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      std::complex<double> g = 0.0;
      for (std::size_t x = 0; x < m; ++x) g += E[a * m + x] * std::conj(E[c * m + x]);
      if (a == c) g -= 1.0;
      sq += std::norm(g);
    }
  }
  return std::sqrt(sq);
}

SpectrumVerification verify_spectrum_finite(const DiscreteMeasure& measure,
                                            const SpectrumCandidate& spectrum,
                                            std::span<const StagePair> stages) {
  if (!spectrum.is_finite()) {
    throw std::invalid_argument("verify_spectrum_finite: spectrum must be finite");
  }
  const auto& pts = spectrum.points();
  SpectrumVerification v;
  v.complete = pts.size() == measure.size();
  v.orthogonal = true;
  for (std::size_t i = 0; i < pts.size() && v.orthogonal; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!zero_set_stage(stages, pts[j] - pts[i])) {
        v.orthogonal = false;
        v.failing_pair = std::make_pair(pts[i], pts[j]);
        break;
      }
    }
  }
  v.residual = gram_residual(measure, pts);
  return v;
}

SpectrumVerification verify_spectrum_finite(const DiscreteMeasure& measure,
                                            const SpectrumCandidate& spectrum,
                                            const SystemConfig& config, const SymbolicWord& word,
                                            std::size_t k) {
  word.check_alphabet(config.size());
  const auto stages = stage_prefix(config, word, k);
  return verify_spectrum_finite(measure, spectrum, std::span<const StagePair>(stages));
}

// -------------------------------------------------------------- Q-function

double q_function(std::span<const StagePair> stages, const SpectrumCandidate& spectrum, double x,
                  std::int64_t lattice_window) {
  double total = 0.0;
  for (const Rational& lambda : spectrum.enumerate(lattice_window)) {
    total += std::norm(mu_hat_finite(stages, x + lambda.to_double()));
  }
  return total;
}

double q_function(const SystemConfig& config, const SymbolicWord& word, std::size_t depth,
                  const SpectrumCandidate& spectrum, double x, std::int64_t lattice_window) {
  word.check_alphabet(config.size());
  const auto stages = stage_prefix(config, word, depth);
  return q_function(std::span<const StagePair>(stages), spectrum, x, lattice_window);
}

// ----------------------------------------------------------- decomposition

Decomposition decompose_spectrum(const SpectrumCandidate& spectrum, std::int64_t b1,
                                 std::int64_t q) {
  if (!spectrum.is_finite()) throw std::invalid_argument("decompose_spectrum: finite spectrum only");
  if (q < 1) throw std::invalid_argument("decompose_spectrum: q must be >= 1");
  if (b1 == 0) throw std::invalid_argument("decompose_spectrum: b1 must be nonzero");
  Decomposition dec;
  dec.q = q;
  const Rational scale{BigInt(q), BigInt(b1)};
  for (const Rational& lambda : spectrum.points()) {
    const Rational v = lambda * scale;
    if (!v.is_integer()) {
      throw std::invalid_argument("decompose_spectrum: (q/b1) * " + lambda.str() +
                                  " is not an integer");
    }
    const BigInt n = floor_mod(v.num(), q);
    dec.classes[to_int64(n)].push_back((v.num() - n) / q);
  }
  for (auto& [n, members] : dec.classes) std::sort(members.begin(), members.end());
  return dec;
}

Decomposition decompose_spectrum(const SpectrumCandidate& spectrum, const StagePair& first,
                                 std::int64_t q) {
  const std::int64_t base = first.p * iabs(first.t);
  if (q % base != 0) {
    throw std::invalid_argument("decompose_spectrum: q must be a multiple of p1 t1");
  }
  Decomposition dec = decompose_spectrum(spectrum, first.b, q);
  dec.tau1 = q / base;
  return dec;
}

std::int64_t default_q(const SystemConfig& config) {
  std::int64_t q = 1;
  for (const StagePair& s : config.pairs()) q = std::lcm(q, s.p * iabs(s.t));
  return q;
}

SpectrumCandidate extract_gamma(const Decomposition& dec, std::span<const std::int64_t> choices,
                                std::int64_t p1, std::int64_t t1) {
  if (p1 < 2 || t1 < 1 || dec.q % (p1 * t1) != 0) {
    throw std::invalid_argument("extract_gamma: q must equal tau1 p1 t1");
  }
  const std::int64_t tau1 = dec.q / (p1 * t1);
  if (dec.tau1 != 0 && dec.tau1 != tau1) {
    throw std::invalid_argument("extract_gamma: decomposition built for a different stage");
  }
  if (static_cast<std::int64_t>(choices.size()) != tau1) {
    throw std::invalid_argument("extract_gamma: need one choice per i in [0, tau1)");
  }
  std::vector<Rational> gamma;
  for (std::int64_t i = 0; i < tau1; ++i) {
    const std::int64_t j = choices[static_cast<std::size_t>(i)];
    if (j < 0 || j >= p1) throw std::invalid_argument("extract_gamma: choice outside [0, p1)");
    for (std::int64_t l = 0; l < t1; ++l) {
      const std::int64_t n = i + tau1 * j + tau1 * p1 * l;
      const auto it = dec.classes.find(n);
      if (it == dec.classes.end()) continue;
      const Rational offset{BigInt(n), BigInt(dec.q)};
      for (const BigInt& z : it->second) gamma.push_back(offset + Rational(z));
    }
  }
  return SpectrumCandidate::finite(std::move(gamma));
}

std::vector<std::optional<Rational>> find_first_stage_representatives(
    const SpectrumCandidate& spectrum, std::int64_t b1, std::int64_t p1, std::int64_t t1) {
  if (p1 < 2 || t1 < 1 || b1 == 0) {
    throw std::invalid_argument("find_first_stage_representatives: bad stage");
  }
  std::vector<std::optional<Rational>> found(static_cast<std::size_t>(p1 - 1));
  const Rational scale{BigInt(p1 * t1), BigInt(b1)};
  for (const Rational& lambda : spectrum.points()) {
    const Rational v = lambda * scale;
    if (!v.is_integer()) continue;
    const auto r = to_int64(floor_mod(v.num(), p1));
    if (r == 0) continue;
    auto& slot = found[static_cast<std::size_t>(r - 1)];
    if (!slot) slot = lambda;
  }
  return found;
}

}  // namespace moran
