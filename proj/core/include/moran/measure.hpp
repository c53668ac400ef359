#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moran/rational.hpp"

namespace moran {

/// One alphabet letter: contraction b and digit set D = {0, t, ..., (p-1)t}.
struct StagePair {
  std::int64_t b = 2;
  std::int64_t p = 2;
  std::int64_t t = 1;

  /// |b| >= 2, p >= 2, t != 0.
  bool valid() const;
  std::vector<std::int64_t> digits() const;
  std::string str() const;

  friend bool operator==(const StagePair&, const StagePair&) = default;
};

/// A stage whose digit step may be rational (digits {0, s, ..., (p-1)s}).
/// Produced by digit scaling; integer configs convert with step = t.
struct ScaledStage {
  std::int64_t b = 2;
  std::int64_t p = 2;
  Rational step = 1;

  friend bool operator==(const ScaledStage&, const ScaledStage&) = default;
};

/// Ordered alphabet of m >= 1 stage pairs, letters numbered 1..m.
///
/// Only the per-pair invariants are enforced here. Coprimality of the
/// alphabet is a hypothesis of the classification theorems and is reported
/// by validate_config() rather than rejected at construction.
class SystemConfig {
 public:
  /// Throws std::invalid_argument when empty or a pair is invalid.
  explicit SystemConfig(std::vector<StagePair> pairs);

  std::size_t size() const { return pairs_.size(); }
  /// 1-based letter lookup.
  const StagePair& letter(int k) const;
  std::span<const StagePair> pairs() const { return pairs_; }

  /// Smallest nonzero magnitude of any mask zero over the alphabet:
  /// min_j 1/(p_j |t_j|).
  Rational min_zero_magnitude() const;

  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;

 private:
  std::vector<StagePair> pairs_;
};

/// Eventually periodic word preperiod . period^inf over letters 1..m,
/// always held in canonical form: the period is primitive and no trailing
/// preperiod letter can be rotated into the period.
class SymbolicWord {
 public:
  SymbolicWord(std::vector<int> preperiod, std::vector<int> period);

  /// Parses "pre;per" with letters separated by commas or spaces, e.g.
  /// "1;2" or "1,2;1,2". An empty preperiod may be written ";2" or "2".
  static SymbolicWord parse(std::string_view text);

  const std::vector<int>& preperiod() const { return preperiod_; }
  const std::vector<int>& period() const { return period_; }

  /// Letter at 1-based position n.
  int letter(std::size_t n) const;
  std::vector<int> prefix(std::size_t k) const;
  /// The word sigma_{n+1} sigma_{n+2} ...
  SymbolicWord shifted(std::size_t n) const;

  std::set<int> letters_infinitely_often() const;
  /// Letters occurring at some position >= n (n >= 1).
  std::set<int> letters_from(std::size_t n) const;
  /// Tail letter j when the word is eventually constant (period of length 1).
  std::optional<int> tail_letter() const;
  int max_letter() const;

  /// Throws std::out_of_range when a letter exceeds the alphabet size m.
  void check_alphabet(std::size_t m) const;

  std::string str() const;

  friend bool operator==(const SymbolicWord&, const SymbolicWord&) = default;

 private:
  void canonicalize();

  std::vector<int> preperiod_;
  std::vector<int> period_;
};

/// Finite probability measure with rational atoms and weights.
class DiscreteMeasure {
 public:
  using Atom = std::pair<Rational, Rational>;  // point, weight

  /// Point mass at zero.
  DiscreteMeasure();
  /// Coinciding points are merged. Throws std::invalid_argument when a
  /// weight is not positive or the weights do not sum to exactly 1.
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  static DiscreteMeasure point_mass(const Rational& x);

  /// Sorted by point.
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  struct Trusted {};
  DiscreteMeasure(std::vector<Atom> atoms, Trusted) : atoms_(std::move(atoms)) {}
  friend DiscreteMeasure convolve_stages(std::span<const ScaledStage>, std::size_t);

  std::vector<Atom> atoms_;
};

/// Thrown when a truncation would exceed the configured atom cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultAtomCap = 1'000'000;

/// The first k stages selected by the word: (b_{sigma_1}, ...), ...
std::vector<StagePair> stage_prefix(const SystemConfig& config, const SymbolicWord& word,
                                    std::size_t k);
std::vector<ScaledStage> to_scaled(std::span<const StagePair> stages);

/// Exact convolution of delta_{B_1^{-1} D_1} * ... * delta_{B_k^{-1} D_k}.
DiscreteMeasure convolve_stages(std::span<const ScaledStage> stages,
                                std::size_t cap = kDefaultAtomCap);
DiscreteMeasure convolve_stages(std::span<const StagePair> stages,
                                std::size_t cap = kDefaultAtomCap);
/// mu_{sigma,k}; k = 0 gives the point mass at 0.
DiscreteMeasure truncate(const SystemConfig& config, const SymbolicWord& word, std::size_t k,
                         std::size_t cap = kDefaultAtomCap);

bool measures_equal(const DiscreteMeasure& a, const DiscreteMeasure& b);

/// x in (Z \ pZ) / (p t), the zero set of the mask of {0..p-1}t.
bool mask_zero_contains(std::int64_t p, std::int64_t t, const Rational& x);

/// Smallest k >= 1 with x / (b_{sigma_1} ... b_{sigma_k}) in the zero set of
/// the k-th mask, or nullopt when x is not a zero of mu_sigma's transform.
std::optional<std::size_t> zero_set_stage(const SystemConfig& config, const SymbolicWord& word,
                                          const Rational& x);
bool zero_set_contains(const SystemConfig& config, const SymbolicWord& word, const Rational& x);
/// Zero test restricted to a finite list of stages (the truncated measure).
std::optional<std::size_t> zero_set_stage(std::span<const StagePair> stages, const Rational& x);

/// m_D(y) = (1/p) sum_j exp(2 pi i j t y).
std::complex<double> mask_value(std::int64_t p, double step, double y);

struct FourierSample {
  std::complex<double> value;
  /// Upper bound on |mu_hat(x) - value| from the omitted factors.
  double tail_bound = 0.0;
};

/// Product of the first `depth` mask factors at x plus a tail estimate
/// based on |m_D(y) - 1| <= pi (p-1) |t| |y|.
FourierSample mu_hat_eval(const SystemConfig& config, const SymbolicWord& word, double x,
                          std::size_t depth);
/// Fourier transform of the finite convolution of `stages` (no tail).
std::complex<double> mu_hat_finite(std::span<const StagePair> stages, double x);

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Convex hull [0, sum_k (p_k - 1) t_k / B_k] of the Moran set, in closed
/// form. Requires b > 0 and t > 0 on every letter of the word.
RationalInterval support_hull(const SystemConfig& config, const SymbolicWord& word);

struct SignNormalization {
  /// Letterwise (|b|, p, |t|).
  SystemConfig normalized;
  /// Shift with nu_hat(x) = exp(2 pi i gamma x) mu_hat(x).
  Rational gamma;
};

SignNormalization normalize_signs(const SystemConfig& config, const SymbolicWord& word);

/// Digits scaled by q: every spectrum transforms by q^{-1}.
struct ScaledConfig {
  std::vector<ScaledStage> stages;  // one per letter
  Rational q;

  /// The scaled alphabet as an integer config when every step is an integer.
  std::optional<SystemConfig> as_integer() const;
};

ScaledConfig scale_digits(const SystemConfig& config, const Rational& q);
std::vector<ScaledStage> scale_digits(std::span<const ScaledStage> stages, const Rational& q);

}  // namespace moran
