#include "moran/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace moran {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

// Sum over k >= 1 of term(stage_k, B_k) for an eventually periodic word, where
// term(s, B * P) == term(s, B) / P for every P > 0. One period is summed
// explicitly and the rest follows from the geometric series; a period with a
// negative product is doubled so the sign pattern repeats.
template <class Term>
Rational periodic_series(const SystemConfig& config, const SymbolicWord& word, Term term) {
  BigInt B = 1;
  Rational head = 0;
  for (const int letter : word.preperiod()) {
    const StagePair& s = config.letter(letter);
    B *= s.b;
    head += term(s, B);
  }
  std::vector<int> period = word.period();
  BigInt P = 1;
  for (const int letter : period) P *= config.letter(letter).b;
  if (P < 0) {
    period.insert(period.end(), word.period().begin(), word.period().end());
    P *= P;
  }
  Rational cycle = 0;
  BigInt Bc = B;
  for (const int letter : period) {
    const StagePair& s = config.letter(letter);
    Bc *= s.b;
    cycle += term(s, Bc);
  }
  return head + cycle * Rational(P, P - 1);
}

}  // namespace

// ---------------------------------------------------------------- StagePair

bool StagePair::valid() const { return iabs(b) >= 2 && p >= 2 && t != 0; }

std::vector<std::int64_t> StagePair::digits() const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) d[static_cast<std::size_t>(j)] = j * t;
  return d;
}

std::string StagePair::str() const {
  std::ostringstream os;
  os << "(b=" << b << ", p=" << p << ", t=" << t << ")";
  return os.str();
}

// ------------------------------------------------------------- SystemConfig

SystemConfig::SystemConfig(std::vector<StagePair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("SystemConfig: empty alphabet");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!pairs_[i].valid()) {
      throw std::invalid_argument("SystemConfig: letter " + std::to_string(i + 1) + " " +
                                  pairs_[i].str() + " violates |b| >= 2, p >= 2, t != 0");
    }
  }
}

const StagePair& SystemConfig::letter(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > pairs_.size()) {
    throw std::out_of_range("SystemConfig: letter " + std::to_string(k) + " outside 1.." +
                            std::to_string(pairs_.size()));
  }
  return pairs_[static_cast<std::size_t>(k - 1)];
}

Rational SystemConfig::min_zero_magnitude() const {
  std::int64_t largest = 0;
  for (const StagePair& s : pairs_) largest = std::max(largest, s.p * iabs(s.t));
  return Rational(1, largest);
}

// ------------------------------------------------------------- SymbolicWord

SymbolicWord::SymbolicWord(std::vector<int> preperiod, std::vector<int> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("SymbolicWord: empty period");
  for (const int l : preperiod_) {
    if (l < 1) throw std::invalid_argument("SymbolicWord: letters start at 1");
  }
  for (const int l : period_) {
    if (l < 1) throw std::invalid_argument("SymbolicWord: letters start at 1");
  }
  canonicalize();
}

void SymbolicWord::canonicalize() {
  const std::size_t n = period_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = period_[i] == period_[i - d];
    if (repeats) {
      period_.resize(d);
      break;
    }
  }
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

SymbolicWord SymbolicWord::parse(std::string_view text) {
  auto letters = [&](std::string_view part) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw std::invalid_argument("word: bad letter '" + token + "'");
      }
      out.push_back(v);
      token.clear();
    };
    for (const char c : part) {
      if (c == ',' || c == ' ' || c == '\t') {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
    return out;
  };
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) return SymbolicWord({}, letters(text));
  if (text.find(';', semi + 1) != std::string_view::npos) {
    throw std::invalid_argument("word: expected 'preperiod;period'");
  }
  return SymbolicWord(letters(text.substr(0, semi)), letters(text.substr(semi + 1)));
}

int SymbolicWord::letter(std::size_t n) const {
  if (n == 0) throw std::out_of_range("SymbolicWord: positions start at 1");
  if (n <= preperiod_.size()) return preperiod_[n - 1];
  return period_[(n - 1 - preperiod_.size()) % period_.size()];
}

std::vector<int> SymbolicWord::prefix(std::size_t k) const {
  std::vector<int> out;
  out.reserve(k);
  for (std::size_t n = 1; n <= k; ++n) out.push_back(letter(n));
  return out;
}

SymbolicWord SymbolicWord::shifted(std::size_t n) const {
  if (n <= preperiod_.size()) {
    return SymbolicWord(std::vector<int>(preperiod_.begin() + static_cast<std::ptrdiff_t>(n),
                                         preperiod_.end()),
                        period_);
  }
  const std::size_t r = (n - preperiod_.size()) % period_.size();
  std::vector<int> rotated(period_.begin() + static_cast<std::ptrdiff_t>(r), period_.end());
  rotated.insert(rotated.end(), period_.begin(), period_.begin() + static_cast<std::ptrdiff_t>(r));
  return SymbolicWord({}, std::move(rotated));
}

std::set<int> SymbolicWord::letters_infinitely_often() const {
  return {period_.begin(), period_.end()};
}

std::set<int> SymbolicWord::letters_from(std::size_t n) const {
  if (n == 0) throw std::out_of_range("SymbolicWord: positions start at 1");
  std::set<int> out(period_.begin(), period_.end());
  for (std::size_t i = n; i <= preperiod_.size(); ++i) out.insert(preperiod_[i - 1]);
  return out;
}

std::optional<int> SymbolicWord::tail_letter() const {
  if (period_.size() == 1) return period_.front();
  return std::nullopt;
}

int SymbolicWord::max_letter() const {
  int m = *std::max_element(period_.begin(), period_.end());
  for (const int l : preperiod_) m = std::max(m, l);
  return m;
}

void SymbolicWord::check_alphabet(std::size_t m) const {
  if (static_cast<std::size_t>(max_letter()) > m) {
    throw std::out_of_range("word " + str() + " uses letter " + std::to_string(max_letter()) +
                            " but the alphabet has " + std::to_string(m) + " letters");
  }
}

std::string SymbolicWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < preperiod_.size(); ++i) os << (i ? "," : "") << preperiod_[i];
  os << ';';
  for (std::size_t i = 0; i < period_.size(); ++i) os << (i ? "," : "") << period_[i];
  return os.str();
}

// ---------------------------------------------------------- DiscreteMeasure

DiscreteMeasure::DiscreteMeasure() : atoms_{{Rational(0), Rational(1)}} {}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.first < b.first; });
  Rational total = 0;
  for (auto& atom : atoms) {
    if (atom.second.sign() <= 0) {
      throw std::invalid_argument("DiscreteMeasure: non-positive weight at " + atom.first.str());
    }
    total += atom.second;
    if (!atoms_.empty() && atoms_.back().first == atom.first) {
      atoms_.back().second += atom.second;
    } else {
      atoms_.push_back(std::move(atom));
    }
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("DiscreteMeasure: weights sum to " + total.str() + ", not 1");
  }
}

DiscreteMeasure DiscreteMeasure::point_mass(const Rational& x) {
  return DiscreteMeasure({{x, Rational(1)}});
}

bool measures_equal(const DiscreteMeasure& a, const DiscreteMeasure& b) { return a == b; }

// -------------------------------------------------------------- truncation

std::vector<StagePair> stage_prefix(const SystemConfig& config, const SymbolicWord& word,
                                    std::size_t k) {
  std::vector<StagePair> out;
  out.reserve(k);
  for (std::size_t n = 1; n <= k; ++n) out.push_back(config.letter(word.letter(n)));
  return out;
}

std::vector<ScaledStage> to_scaled(std::span<const StagePair> stages) {
  std::vector<ScaledStage> out;
  out.reserve(stages.size());
  for (const StagePair& s : stages) out.push_back({s.b, s.p, Rational(s.t)});
  return out;
}

DiscreteMeasure convolve_stages(std::span<const ScaledStage> stages, std::size_t cap) {
  BigInt count = 1;
  for (const ScaledStage& s : stages) {
    if (iabs(s.b) < 2 || s.p < 2 || s.step.is_zero()) {
      throw std::invalid_argument("convolve_stages: invalid stage");
    }
    count *= s.p;
    if (count > cap) {
      throw CapExceeded("truncation needs " + count.str() + "+ atoms, cap is " +
                        std::to_string(cap));
    }
  }
  if (stages.empty()) return DiscreteMeasure();

  // Every atom is n / C with C = |B_k| * lcm(step denominators).
  BigInt L = 1;
  BigInt Bk = 1;
  for (const ScaledStage& s : stages) {
    L = lcm(L, s.step.den());
    Bk *= s.b;
  }
  const BigInt absBk = boost::multiprecision::abs(Bk);
  const BigInt C = absBk * L;

  std::vector<std::pair<BigInt, BigInt>> cur{{BigInt(0), BigInt(1)}};
  std::vector<std::pair<BigInt, BigInt>> next;
  BigInt Bj = 1;
  for (const ScaledStage& s : stages) {
    Bj *= s.b;
    // step / B_j expressed over C.
    BigInt unit = s.step.num() * (L / s.step.den()) * (absBk / boost::multiprecision::abs(Bj));
    if (Bj < 0) unit = -unit;
    next.clear();
    next.reserve(cur.size() * static_cast<std::size_t>(s.p));
    for (const auto& [x, w] : cur) {
      BigInt shift = 0;
      for (std::int64_t i = 0; i < s.p; ++i) {
        next.emplace_back(x + shift, w);
        shift += unit;
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cur.clear();
    for (auto& e : next) {
      if (!cur.empty() && cur.back().first == e.first) {
        cur.back().second += e.second;
      } else {
        cur.push_back(std::move(e));
      }
    }
  }

  std::vector<DiscreteMeasure::Atom> atoms;
  atoms.reserve(cur.size());
  for (auto& [x, w] : cur) atoms.emplace_back(Rational(std::move(x), C), Rational(std::move(w), count));
  return DiscreteMeasure(std::move(atoms), DiscreteMeasure::Trusted{});
}

DiscreteMeasure convolve_stages(std::span<const StagePair> stages, std::size_t cap) {
  const auto scaled = to_scaled(stages);
  return convolve_stages(std::span<const ScaledStage>(scaled), cap);
}

DiscreteMeasure truncate(const SystemConfig& config, const SymbolicWord& word, std::size_t k,
                         std::size_t cap) {
  word.check_alphabet(config.size());
  const auto stages = stage_prefix(config, word, k);
  return convolve_stages(std::span<const StagePair>(stages), cap);
}

// ---------------------------------------------------------------- zero sets

bool mask_zero_contains(std::int64_t p, std::int64_t t, const Rational& x) {
  const Rational n = x * Rational(p * t);
  if (!n.is_integer()) return false;
  return n.num() % p != 0;
}

std::optional<std::size_t> zero_set_stage(const SystemConfig& config, const SymbolicWord& word,
                                          const Rational& x) {
  word.check_alphabet(config.size());
  if (x.is_zero()) return std::nullopt;
  const Rational bound = config.min_zero_magnitude();
  Rational y = x;
  for (std::size_t k = 1;; ++k) {
    const StagePair& s = config.letter(word.letter(k));
    y /= Rational(s.b);
    if (y.abs() < bound) return std::nullopt;
    if (mask_zero_contains(s.p, s.t, y)) return k;
  }
}

bool zero_set_contains(const SystemConfig& config, const SymbolicWord& word, const Rational& x) {
  return zero_set_stage(config, word, x).has_value();
}

std::optional<std::size_t> zero_set_stage(std::span<const StagePair> stages, const Rational& x) {
  if (x.is_zero()) return std::nullopt;
  Rational y = x;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    y /= Rational(stages[k].b);
    if (mask_zero_contains(stages[k].p, stages[k].t, y)) return k + 1;
  }
  return std::nullopt;
}

// ------------------------------------------------------- Fourier transform

std::complex<double> mask_value(std::int64_t p, double step, double y) {
  const double theta = 2.0 * std::numbers::pi * step * y;
  std::complex<double> sum = 0.0;
  for (std::int64_t j = 0; j < p; ++j) {
    sum += std::polar(1.0, theta * static_cast<double>(j));
  }
  return sum / static_cast<double>(p);
}

FourierSample mu_hat_eval(const SystemConfig& config, const SymbolicWord& word, double x,
                          std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("mu_hat_eval: depth must be >= 1");
  word.check_alphabet(config.size());
  if (x == 0.0) return {1.0, 0.0};
  std::complex<double> value = 1.0;
  double y = x;
  for (std::size_t k = 1; k <= depth; ++k) {
    const StagePair& s = config.letter(word.letter(k));
    y /= static_cast<double>(s.b);
    value *= mask_value(s.p, static_cast<double>(s.t), y);
  }
  // Omitted factors k > depth: |y_k| <= |y_depth| r^{-(k-depth)} with r the
  // smallest |b| of the alphabet, and |prod a_k - 1| <= sum |a_k - 1|.
  double worst = 0.0;
  double r = 1e300;
  for (const StagePair& s : config.pairs()) {
    worst = std::max(worst, static_cast<double>((s.p - 1) * iabs(s.t)));
    r = std::min(r, static_cast<double>(iabs(s.b)));
  }
  const double tail = std::numbers::pi * worst * std::abs(y) / (r - 1.0);
  return {value, std::abs(value) * std::min(tail, 2.0)};
}

std::complex<double> mu_hat_finite(std::span<const StagePair> stages, double x) {
  std::complex<double> value = 1.0;
  double y = x;
  for (const StagePair& s : stages) {
    y /= static_cast<double>(s.b);
    value *= mask_value(s.p, static_cast<double>(s.t), y);
  }
  return value;
}

// ------------------------------------------------------ hull and rewrites

RationalInterval support_hull(const SystemConfig& config, const SymbolicWord& word) {
  word.check_alphabet(config.size());
  for (const int l : word.letters_from(1)) {
    const StagePair& s = config.letter(l);
    if (s.b < 0 || s.t < 0) {
      throw std::invalid_argument("support_hull: letter " + std::to_string(l) +
                                  " has negative b or t; normalize signs first");
    }
  }
  const Rational hi = periodic_series(config, word, [](const StagePair& s, const BigInt& B) {
    return Rational(BigInt((s.p - 1) * s.t), B);
  });
  return {Rational(0), hi};
}

SignNormalization normalize_signs(const SystemConfig& config, const SymbolicWord& word) {
  word.check_alphabet(config.size());
  const Rational gamma =
      periodic_series(config, word, [](const StagePair& s, const BigInt& B) -> Rational {
        if ((B < 0) == (s.t < 0)) return Rational(0);
        return -Rational(BigInt((s.p - 1) * s.t), B);
      });
  std::vector<StagePair> pairs;
  pairs.reserve(config.size());
  for (const StagePair& s : config.pairs()) pairs.push_back({iabs(s.b), s.p, iabs(s.t)});
  return {SystemConfig(std::move(pairs)), gamma};
}

std::optional<SystemConfig> ScaledConfig::as_integer() const {
  std::vector<StagePair> pairs;
  for (const ScaledStage& s : stages) {
    if (!s.step.is_integer()) return std::nullopt;
    pairs.push_back({s.b, s.p, to_int64(s.step.num())});
  }
  return SystemConfig(std::move(pairs));
}

ScaledConfig scale_digits(const SystemConfig& config, const Rational& q) {
  if (q.is_zero()) throw std::invalid_argument("scale_digits: q must be nonzero");
  ScaledConfig out{{}, q};
  for (const StagePair& s : config.pairs()) out.stages.push_back({s.b, s.p, q * Rational(s.t)});
  return out;
}

std::vector<ScaledStage> scale_digits(std::span<const ScaledStage> stages, const Rational& q) {
  if (q.is_zero()) throw std::invalid_argument("scale_digits: q must be nonzero");
  std::vector<ScaledStage> out;
  out.reserve(stages.size());
  for (const ScaledStage& s : stages) out.push_back({s.b, s.p, q * s.step});
  return out;
}

}  // namespace moran
