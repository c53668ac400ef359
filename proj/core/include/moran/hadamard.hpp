#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace moran {

/// (b, {0,...,p-1}t) is admissible iff p divides b / gcd(b, t).
bool is_admissible(std::int64_t b, std::int64_t p, std::int64_t t);

/// Spectrum digits L = (|b| / (gcd(b,t) p)) {0, ..., p-1}, all in [0, |b|).
///
/// For b < 0 this is the negation of (b t'/(t p)) {0..p-1}; a compatible
/// set stays compatible under negation. Throws std::invalid_argument when
/// the pair is not admissible.
std::vector<std::int64_t> canonical_L(std::int64_t b, std::int64_t p, std::int64_t t);

/// Exact test that m_D((l1 - l2)/b) = 0 for all distinct l1, l2 in L,
/// for an arbitrary integer digit set D. Throws std::invalid_argument on a
/// size mismatch or empty sets.
bool is_compatible_pair(std::int64_t b, std::span<const std::int64_t> D,
                        std::span<const std::int64_t> L);

/// Exact vanishing of sum_{d in D} exp(2 pi i d delta / b).
bool difference_is_orthogonal(std::int64_t b, std::span<const std::int64_t> D,
                              std::int64_t delta);

/// Frobenius norm of H*H - I for H = (1/sqrt #D)[exp(2 pi i d l / b)].
double unitarity_residual(std::int64_t b, std::span<const std::int64_t> D,
                          std::span<const std::int64_t> L);

/// sum_{l in L} |m_D(l/b + x)|^2 with m_D the normalized exponential sum.
double parseval_check(std::int64_t b, std::span<const std::int64_t> D,
                      std::span<const std::int64_t> L, double x);

struct TripleCheckReport {
  bool exact_compatible = false;
  double unitarity_residual = 0.0;
  /// Set when D is an arithmetic progression {0..p-1}t and (b, D) is admissible.
  std::optional<std::vector<std::int64_t>> canonical_L;
};

TripleCheckReport check_triple(std::int64_t b, std::span<const std::int64_t> D,
                               std::span<const std::int64_t> L);

}  // namespace moran
