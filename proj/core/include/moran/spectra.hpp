#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "moran/measure.hpp"
#include "moran/rational.hpp"

namespace moran {

/// Candidate exponent set: either a finite list of points or the
/// lattice-periodic set digits + period * Z.
class SpectrumCandidate {
 public:
  /// Sorted; throws std::invalid_argument on repeated points. May be empty.
  static SpectrumCandidate finite(std::vector<Rational> points);
  /// Digits are reduced into [0, period) and must stay distinct.
  static SpectrumCandidate structured(std::vector<Rational> digits, Rational period);

  bool is_finite() const { return !period_.has_value(); }
  bool empty() const { return points_.empty(); }
  /// Finite points, or the reduced digits of a structured set.
  const std::vector<Rational>& points() const { return points_; }
  const std::optional<Rational>& period() const { return period_; }

  /// Finite: all points. Structured: digits + period * {-window, ..., window}.
  std::vector<Rational> enumerate(std::int64_t window) const;

  friend bool operator==(const SpectrumCandidate&, const SpectrumCandidate&) = default;

 private:
  std::vector<Rational> points_;
  std::optional<Rational> period_;
};

/// Raised when two tower sums coincide.
class DegenerateTower : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lambda_k = L_1 + B_1 L_2 + ... + B_{k-1} L_k from canonical per-stage
/// digit sets. Throws std::invalid_argument for a non-admissible stage and
/// DegenerateTower on duplicate points.
SpectrumCandidate build_tower_spectrum(std::span<const StagePair> stages);
SpectrumCandidate build_tower_spectrum(const SystemConfig& config, const SymbolicWord& word,
                                       std::size_t k);

struct SpectrumVerification {
  /// Every nonzero difference is an exact zero of some retained mask.
  bool orthogonal = false;
  /// #Lambda equals the number of atoms.
  bool complete = false;
  /// Frobenius norm of the Gram matrix of weighted exponentials minus I.
  double residual = 0.0;
  std::optional<std::pair<Rational, Rational>> failing_pair;

  bool ok() const { return orthogonal && complete; }
};

SpectrumVerification verify_spectrum_finite(const DiscreteMeasure& measure,
                                            const SpectrumCandidate& spectrum,
                                            std::span<const StagePair> stages);
SpectrumVerification verify_spectrum_finite(const DiscreteMeasure& measure,
                                            const SpectrumCandidate& spectrum,
                                            const SystemConfig& config, const SymbolicWord& word,
                                            std::size_t k);

/// Frobenius residual of the Gram matrix sum_x w_x exp(2 pi i (l - l') x) - I.
double gram_residual(const DiscreteMeasure& measure, std::span<const Rational> points);

/// Q(x) = sum over enumerated lambda of |mu_hat_depth(x + lambda)|^2.
double q_function(const SystemConfig& config, const SymbolicWord& word, std::size_t depth,
                  const SpectrumCandidate& spectrum, double x, std::int64_t lattice_window);
double q_function(std::span<const StagePair> stages, const SpectrumCandidate& spectrum, double x,
                  std::int64_t lattice_window);

/// (1/b1) Lambda = union_n (n/q + Lambda_n).
struct Decomposition {
  std::int64_t q = 1;
  /// q / (p1 t1) when the first stage is known, 0 otherwise.
  std::int64_t tau1 = 0;
  /// Residue n -> sorted integer set Lambda_n; empty classes are omitted.
  std::map<std::int64_t, std::vector<BigInt>> classes;
};

/// Throws std::invalid_argument naming the first lambda with (q/b1) lambda
/// not an integer.
Decomposition decompose_spectrum(const SpectrumCandidate& spectrum, std::int64_t b1,
                                 std::int64_t q);
/// Same, with tau1 = q / (p1 t1) recorded for the stage (b1, p1, t1).
Decomposition decompose_spectrum(const SpectrumCandidate& spectrum, const StagePair& first,
                                 std::int64_t q);

/// lcm over the alphabet of p_k |t_k|.
std::int64_t default_q(const SystemConfig& config);

/// Gamma = union_i union_l ((i + tau1 j_i + tau1 p1 l)/q + Lambda_{i + tau1 j_i + tau1 p1 l})
/// for the choice map i -> j_i (choices.size() == tau1).
SpectrumCandidate extract_gamma(const Decomposition& dec, std::span<const std::int64_t> choices,
                                std::int64_t p1, std::int64_t t1);

/// For j = 1..p1-1, an element b1 (j + p1 l)/(p1 t1) + b1 z of Lambda if one
/// is present (index j-1 of the result); absence is not a verdict.
std::vector<std::optional<Rational>> find_first_stage_representatives(
    const SpectrumCandidate& spectrum, std::int64_t b1, std::int64_t p1, std::int64_t t1);

}  // namespace moran
