// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "moran/classifier.hpp"
#include "moran/hadamard.hpp"
#include "moran/measure.hpp"
#include "moran/oracle.hpp"
#include "moran/spectra.hpp"
#include "moran/tiling.hpp"

using namespace moran;

namespace {

constexpr double kResidualTolerance = 1e-9;
constexpr double kQTolerance = 1e-9;
constexpr std::size_t kQGrid = 256;
constexpr double kMagnitudeTolerance = 1e-12;

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Collects the first few failure descriptions of a criterion.
struct Failures {
  std::size_t count = 0;
  std::vector<std::string> samples;

  void add(const std::string& what) {
    ++count;
    if (samples.size() < 5) samples.push_back(what);
  }
  bool none() const { return count == 0; }
};

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::vector<std::vector<int>> sequences(int letters, std::size_t len) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& s : out)
      for (int a = 1; a <= letters; ++a) {
        auto t = s;
        t.push_back(a);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

// --------------------------------------------------------------------------

Failures two_letter_sweep() {
  Failures f;
  for (std::int64_t p1 = 2; p1 <= 5; ++p1)
    for (std::int64_t p2 = 2; p2 <= 5; ++p2)
      for (std::int64_t b1 = 2; b1 <= 8; ++b1)
        for (std::int64_t t1 = 1; t1 <= 6; ++t1)
          for (std::int64_t t2 = 1; t2 <= 6; ++t2) {
            const auto d = two_stage_decide(p1, p2, b1, t1, t2);
            const bool expected = t1 % t2 == 0;
            const std::string tag = cat("(", p1, ",", p2, ",", b1, ",", t1, ",", t2, ")");
            if (d.divides != expected || d.spectral != expected || d.tiles != expected) f.add(tag + " flags");
            if (expected && !d.tiling_verified) f.add(tag + " tiling check");
            if (!expected && d.residue != t1 % t2) f.add(tag + " residue");
          }
  return f;
}

Failures admissibility_oracle() {
  Failures f;
  for (std::int64_t b = -12; b <= 12; ++b) {
    if (std::llabs(b) < 2) continue;
    for (std::int64_t p = 2; p <= 6; ++p)
      for (std::int64_t t = -6; t <= 6; ++t) {
        if (t == 0) continue;
        const std::int64_t window = std::llabs(b) * p * std::llabs(t);
        const bool admissible = is_admissible(b, p, t);
        const IntSet canonical = admissible ? canonical_L(b, p, t) : IntSet{};
        bool any = false, canonical_found = false;
        for_each_compatible_L(b, p, t, window, [&](const IntSet& L) {
          any = true;
          canonical_found = L == canonical;
          return !canonical_found && admissible;
        });
        const std::string tag = cat("(", b, ",", p, ",", t, ")");
        if (any != admissible) f.add(tag + (admissible ? " no compatible set" : " unexpected compatible set"));
        if (admissible && !canonical_found) f.add(tag + " canonical set missing");
      }
  }
  return f;
}

Failures tower_validity() {
  Failures f;
  std::vector<StagePair> letters;
  for (std::int64_t b : {2, 4, 6, 12})
    for (std::int64_t p : {2, 3})
      for (std::int64_t t : {1, 3, 5})
        if (is_admissible(b, p, t)) letters.push_back({b, p, t});
  std::size_t towers = 0;
  for (const auto& a : letters)
    for (const auto& c : letters) {
      if (a == c) continue;
      const std::vector<StagePair> alphabet{a, c};
      if (!validate_stages(alphabet).empty()) continue;
      for (std::size_t len = 1; len <= 4; ++len)
        for (const auto& word : sequences(2, len)) {
          std::vector<StagePair> stages;
          for (int k : word) stages.push_back(alphabet[static_cast<std::size_t>(k - 1)]);
          ++towers;
          const std::string tag = cat(a.str(), c.str(), " word of length ", len);
          const DiscreteMeasure mu = convolve_stages(std::span<const StagePair>(stages));
          const SpectrumCandidate tower = build_tower_spectrum(stages);
          const auto v = verify_spectrum_finite(mu, tower, stages);
          if (!v.ok()) f.add(tag + " not orthogonal or incomplete");
          if (!(v.residual < kResidualTolerance)) f.add(tag + cat(" residual ", v.residual));
          double worst = 0.0;
          for (std::size_t i = 0; i < kQGrid; ++i) {
            const double x = static_cast<double>(i) / kQGrid;
            worst = std::max(worst, std::abs(q_function(stages, tower, x, 0) - 1.0));
          }
          if (!(worst < kQTolerance)) f.add(tag + cat(" Q deviation ", worst));
        }
    }
  if (towers == 0) f.add("no towers generated");
  return f;
}

Failures rewrites() {
  Failures f;
  const SystemConfig first({{12, 2, 1}, {2, 3, 4}, {6, 2, 1}});
  const SystemConfig second({{6, 6, 1}, {6, 2, 3}, {2, 6, 1}});
  const SymbolicWord word({1}, {2, 3});
  const SymbolicWord constant({}, {1});
  const SystemConfig six({{12, 6, 1}});
  const SystemConfig twelve({{12, 12, 1}});
  for (std::size_t k = 1; k <= 3; ++k) {
    if (!measures_equal(truncate(first, word, 2 * k), truncate(six, constant, k))) f.add(cat("first rewrite k=", k));
    if (!measures_equal(truncate(second, word, 2 * k), truncate(twelve, constant, k))) f.add(cat("second rewrite k=", k));
  }
  return f;
}

Failures equal_contraction_family() {
  Failures f;
  std::vector<SymbolicWord> words;
  for (std::size_t lp = 0; lp <= 3; ++lp)
    for (std::size_t lq = 1; lq <= 3; ++lq)
      for (const auto& pre : sequences(2, lp))
        for (const auto& per : sequences(2, lq)) words.emplace_back(pre, per);
  for (std::int64_t p : {2, 3})
    for (std::int64_t t : {3, 5}) {
      if (std::gcd(p, t) != 1) continue;
      for (std::int64_t k : {1, 2}) {
        const SystemConfig config({{k * p, p, 1}, {k * p, p, t}});
        for (const auto& w : words) {
          const auto kind = theorem_main_decide(config, w).kind;
          VerdictKind expected = VerdictKind::Spectral;
          if (k == 1 && !w.letters_infinitely_often().contains(1) && !w.preperiod().empty()) {
            expected = VerdictKind::NotSpectral;  // i_1 ... i_l 2^inf with i_l = 1
          }
          if (kind != expected) f.add(cat("p=", p, " t=", t, " k=", k, " word ", w.str(), " got ", to_string(kind)));
        }
      }
    }
  return f;
}

Failures zero_set_probes() {
  Failures f;
  const SymbolicWord constant({}, {1});
  const SystemConfig nonempty({{2, 2, 3}});
  for (std::int64_t k = -200; k <= 200; ++k) {
    if (!zero_set_contains(nonempty, constant, R(1, 3) + Rational(k))) f.add(cat("1/3 + ", k, " not a zero"));
  }
  const SystemConfig empty({{4, 2, 3}});
  int tested = 0;
  for (std::int64_t m = -19; tested < 25; ++m) {
    if (m % 3 == 0) continue;
    ++tested;
    if (!z_membership_probe(empty, constant, R(m, 3), 200).witness) f.add(cat("no witness for ", m, "/3"));
  }
  return f;
}

Failures gamma_extraction() {
  Failures f;
  const std::vector<std::vector<StagePair>> alphabets{
      {{4, 2, 1}},
      {{12, 2, 1}, {6, 3, 4}},
      {{12, 2, 1}, {12, 3, 5}},
      {{6, 2, 3}, {6, 3, 1}},
  };
  std::size_t verified = 0;
  for (const auto& pairs : alphabets) {
    const SystemConfig config(pairs);
    const std::int64_t q = default_q(config);
    for (const auto& seq : sequences(static_cast<int>(pairs.size()), 3)) {
      const SymbolicWord word(std::vector<int>(seq.begin(), seq.end() - 1), {seq.back()});
      const auto stages = stage_prefix(config, word, 3);
      const StagePair& first = stages.front();
      const auto dec = decompose_spectrum(build_tower_spectrum(stages), first, q);
      const SymbolicWord tail = word.shifted(1);
      const DiscreteMeasure tail_measure = truncate(config, tail, 2);
      std::vector<std::int64_t> choices(static_cast<std::size_t>(dec.tau1), 0);
      while (true) {
        const SpectrumCandidate gamma = extract_gamma(dec, choices, first.p, first.t);
        if (!gamma.empty()) {
          ++verified;
          const auto v = verify_spectrum_finite(tail_measure, gamma, config, tail, 2);
          if (!v.ok() || !(v.residual < kResidualTolerance)) {
            f.add(cat("alphabet of ", pairs.size(), " word ", word.str(), " choice ", choices.empty() ? -1 : choices[0]));
          }
        }
        std::size_t i = 0;
        while (i < choices.size() && ++choices[i] == first.p) choices[i++] = 0;
        if (i == choices.size()) break;
      }
    }
  }
  if (verified == 0) f.add("no nonempty Gamma");
  return f;
}

Failures weighted_average() {
  Failures f;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const bool tight = rng() % 2 == 0;
    RationalMatrix p(rows), x(rows);
    Rational left = R(1);
    for (std::size_t i = 0; i < rows; ++i) {
      Rational m = (i + 1 == rows) ? left : left * R(static_cast<std::int64_t>(rng() % 5), 4);
      if (!tight) m *= R(static_cast<std::int64_t>(rng() % 4) + 1, 4);
      left -= m;
      std::int64_t total = 0;
      std::vector<std::int64_t> w(cols);
      for (auto& v : w) total += (v = 1 + static_cast<std::int64_t>(rng() % 6));
      for (std::size_t j = 0; j < cols; ++j) {
        p[i].push_back(R(w[j], total));
        const bool at_max = tight || j == 0 || rng() % 3 != 0;
        x[i].push_back(at_max ? m : m * R(static_cast<std::int64_t>(rng() % 4), 4));
      }
    }
    if (!weighted_average_check(p, x).equivalent) f.add(cat("trial ", trial));
  }
  return f;
}

Failures invariance() {
  Failures f;
  std::mt19937 rng(7);
  const std::int64_t ps[] = {2, 3, 5};
  const std::int64_t ts[] = {1, 7, 11, 13};
  auto sign = [&]() { return rng() % 2 ? 1 : -1; };
  for (int trial = 0; trial < 100; ++trial) {
    // Alphabet of three letters; steps are distinct members of ts so the
    // alphabet is pairwise coprime.
    std::vector<std::int64_t> steps(ts, ts + 4);
    std::shuffle(steps.begin(), steps.end(), rng);
    std::vector<StagePair> pairs;
    for (int k = 0; k < 3; ++k) {
      const std::int64_t p = ps[rng() % 3];
      const std::int64_t b = p * (1 + static_cast<std::int64_t>(rng() % 3)) + (rng() % 4 == 0 ? 1 : 0);
      pairs.push_back({sign() * b, p, sign() * steps[static_cast<std::size_t>(k)]});
    }
    std::vector<int> pre(rng() % 3), per(1 + rng() % 2);
    for (int& v : pre) v = 1 + static_cast<int>(rng() % 3);
    for (int& v : per) v = 1 + static_cast<int>(rng() % 3);
    const SymbolicWord word(pre, per);
    const SystemConfig config(pairs);
    const std::string tag = cat("trial ", trial);

    // Sign normalization keeps the verdict and |mu_hat|.
    const auto norm = normalize_signs(config, word);
    if (theorem_main_decide(config, word).kind != theorem_main_decide(norm.normalized, word).kind) {
      f.add(tag + " sign normalization changes the verdict");
    }
    for (double x : {0.3, 1.7, 5.25}) {
      const double a = std::abs(mu_hat_eval(config, word, x, 30).value);
      const double b = std::abs(mu_hat_eval(norm.normalized, word, x, 30).value);
      if (std::abs(a - b) > kMagnitudeTolerance) f.add(tag + cat(" |mu_hat| differs at ", x));
    }

    // The first contraction never matters when the first letter does not recur.
    const int first = word.letter(1);
    if (!word.letters_from(2).contains(first)) {
      const VerdictKind base = theorem_main_decide(config, word).kind;
      for (std::int64_t b = 2; b <= 9; ++b) {
        std::vector<StagePair> changed = pairs;
        changed[static_cast<std::size_t>(first - 1)].b = sign() * b;
        if (theorem_main_decide(SystemConfig(changed), word).kind != base) f.add(tag + cat(" b1=", b));
      }
    }

    // Scaling digits by q maps a spectrum Lambda to Lambda / q.
    std::vector<StagePair> stages;
    for (const auto& s : stage_prefix(config, word, 3)) {
      if (is_admissible(s.b, s.p, s.t)) stages.push_back(s);
    }
    if (stages.empty()) stages.push_back({std::llabs(pairs[0].t) * 2 * 2, 2, pairs[0].t});
    const SpectrumCandidate tower = build_tower_spectrum(stages);
    const Rational q = R(1 + static_cast<std::int64_t>(rng() % 6), 1 + static_cast<std::int64_t>(rng() % 4));
    const auto scaled = scale_digits(to_scaled(stages), q);
    const DiscreteMeasure mu = convolve_stages(std::span<const ScaledStage>(scaled));
    std::vector<Rational> moved;
    for (const auto& l : tower.points()) moved.push_back(l / q);
    if (!(gram_residual(mu, moved) < kResidualTolerance)) f.add(tag + " scaled spectrum");
  }
  return f;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Failures()>>> criteria{
      {"1 two-letter family flags and tilings", two_letter_sweep},
      {"2 admissibility vs brute-force compatible sets", admissibility_oracle},
      {"3 tower spectra verify and Q = 1", tower_validity},
      {"4 stage rewrites are exact", rewrites},
      {"5 equal-contraction family regression", equal_contraction_family},
      {"6 zero set probes", zero_set_probes},
      {"7 tail spectra from a decomposed tower", gamma_extraction},
      {"8 weighted average equivalence", weighted_average},
      {"9 sign, first contraction and scaling invariance", invariance},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failures f;
    try {
      f = check();
    } catch (const std::exception& e) {
      f.add(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.2fs)\n", f.none() ? "PASS" : "FAIL", name, secs);
    if (!f.none()) {
      ++failed;
      std::printf("  %zu failure(s)\n", f.count);
      for (const auto& s : f.samples) std::printf("  %s\n", s.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
