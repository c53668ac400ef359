#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "moran/measure.hpp"
#include "moran/rational.hpp"

namespace moran {

enum class VerdictKind { Spectral, NotSpectral, OutOfScope };

/// Which clause of which decision rule produced a verdict.
enum class Clause {
  None,
  Divisibility,     // p | b fails at some position n >= 2
  PiL,              // word is i_1 ... i_l j^inf with |b_j| = p_j, |t_j| != 1
  TwoStageResidue,  // t2 does not divide t1
  AlternatingDivisibility,  // p1 does not divide b_{2k+1} t_{2k}
  Hypothesis,       // input outside the decision rule's hypotheses
};

std::string to_string(VerdictKind kind);
std::string to_string(Clause clause);

struct Certificate {
  Clause clause = Clause::None;
  /// 1-based word position (or pair index k for the alternating family).
  std::optional<std::size_t> position;
  std::optional<int> letter;
  /// Pi_l witness: preperiod length l and tail letter j.
  std::optional<std::size_t> l;
  std::optional<int> j;
  std::string message;
};

struct SpectralVerdict {
  VerdictKind kind = VerdictKind::OutOfScope;
  Certificate certificate;
};

struct ConfigViolation {
  std::string field;
  std::string message;
};

/// Per-pair ranges and pairwise coprimality of (p_k; t_1, ..., t_m):
/// gcd(p_k, t_j) = 1 for all k, j and gcd(t_i, t_j) = 1 for i != j.
/// Every violation is listed; an empty result means ok.
std::vector<ConfigViolation> validate_stages(std::span<const StagePair> pairs);
std::vector<ConfigViolation> validate_config(const SystemConfig& config);

struct EventuallyConstant {
  int tail = 0;
  /// Last letter before the constant tail (absent for j^inf).
  std::optional<int> last_differing;
  /// Preperiod length.
  std::size_t l = 0;
};

struct WordClassification {
  std::set<int> unit_step_letters;   // |t_k| = 1
  std::set<int> other_letters;       // |t_k| != 1
  std::optional<EventuallyConstant> eventually_constant;
  std::set<int> letters_in_tail;
  std::set<int> letters_at_positions_ge_2;
};

WordClassification classify_word(const SystemConfig& config, const SymbolicWord& word);

/// Spectral iff p | b for every letter at positions n >= 2 and the word is
/// not i_1 ... i_l j^inf with i_l != j, |b_j| = p_j and |t_j| != 1.
/// OutOfScope when validate_config reports violations or the word uses a
/// letter outside the alphabet.
SpectralVerdict theorem_main_decide(const SystemConfig& config, const SymbolicWord& word);

struct NecessityViolation {
  /// Stage index k (1-based): p_k does not divide t_{k+1} and p_{k+1} does
  /// not divide b_{k+1} t_k.
  std::size_t k = 0;
  StagePair current;
  StagePair next;
};

/// Checks k = 1 .. min(horizon, stages.size() - 1).
std::vector<NecessityViolation> necessity_check(std::span<const StagePair> stages,
                                                std::size_t horizon);

/// Flags for the two-letter family (b1, {0..p1-1} t1), (p2, {0..p2-1} t2)^inf.
struct TwoStageDecision {
  bool divides = false;
  bool spectral = false;
  bool tiles = false;
  /// tiles was confirmed by the exact interval tiling check.
  bool tiling_verified = false;
  /// t1 mod t2 when it is nonzero.
  std::optional<std::int64_t> residue;
  /// When t1 < t2 the blocks of the support overlap and the support is one
  /// interval. That interval tiles by translation even though t2 does not
  /// divide t1; the tiles flag keeps the divisibility value.
  bool support_is_single_interval = false;
};

/// Throws std::invalid_argument unless p1, p2, b1 >= 2 and t1, t2 >= 1.
TwoStageDecision two_stage_decide(std::int64_t p1, std::int64_t p2, std::int64_t b1,
                                  std::int64_t t1, std::int64_t t2);

struct ZSetVerdict {
  /// true: Z is empty; false: Z is nonempty; nullopt: no criterion applies.
  std::optional<bool> empty;
  std::string criterion;
};

/// Sufficient criteria for emptiness of the integral periodic zero set, plus
/// the nonempty case j^inf with |b_j| = p_j and |t_j| != 1.
ZSetVerdict z_set_criteria(const SystemConfig& config, const SymbolicWord& word);

struct ZProbeResult {
  /// k with mu_hat(xi + k) != 0, certifying xi is not in Z.
  std::optional<std::int64_t> witness;
  std::size_t scanned = 0;
};

/// Scans k = 0, 1, -1, 2, -2, ... up to |k| <= window with the exact
/// zero-set test. No witness is inconclusive. Throws when window < 1.
ZProbeResult z_membership_probe(const SystemConfig& config, const SymbolicWord& word,
                                const Rational& xi, std::int64_t window);

/// Alternating family: odd stages (b_{2k+1}, {0..p1-1}), even stages
/// (p2 t_{2k}, {0..p2-1} t_{2k}). odd_b[i] is b_{2i+3} and even_t[i] is
/// t_{2i+2}, both repeated periodically. Spectral iff p1 | b_{2k+1} t_{2k}
/// over one full alignment of the two periods.
SpectralVerdict alternating_family_decide(std::int64_t p1, std::int64_t p2,
                                          std::span<const std::int64_t> odd_b,
                                          std::span<const std::int64_t> even_t);

/// First `count` stages of the alternating family with first contraction b1.
std::vector<StagePair> alternating_family_stages(std::int64_t p1, std::int64_t p2, std::int64_t b1,
                                                 std::span<const std::int64_t> odd_b,
                                                 std::span<const std::int64_t> even_t,
                                                 std::size_t count);

/// The merged form after scaling digits by p2: stage 1 is (b1, p1 p2, 1) and
/// stage k+1 is (b_{2k} b_{2k+1}, p1 p2, 1).
std::vector<StagePair> alternating_family_merged(std::int64_t p1, std::int64_t p2, std::int64_t b1,
                                                 std::span<const std::int64_t> odd_b,
                                                 std::span<const std::int64_t> even_t,
                                                 std::size_t count);

}  // namespace moran
