#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "moran/rational.hpp"

namespace moran {

/// Integer polynomial, coefficients stored lowest degree first.
/// The zero polynomial is the empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  /// x^n - 1
  static IntPoly x_pow_minus_one(std::int64_t n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;

  /// Exact division by a monic polynomial; returns {quotient, remainder}.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Cyclotomic polynomial Phi_n. Throws std::invalid_argument for n <= 0.
IntPoly cyclotomic_poly(std::int64_t n);

/// Sum of n-th roots of unity zeta_n^a over a multiset of exponents.
class RootSum {
 public:
  /// Exponents are reduced into [0, order). Throws std::invalid_argument
  /// when order < 1 or the multiset is empty.
  RootSum(std::int64_t order, std::span<const std::int64_t> exponents);
  RootSum(std::int64_t order, std::initializer_list<std::int64_t> exponents)
      : RootSum(order, std::span<const std::int64_t>(exponents.begin(), exponents.size())) {}

  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }

 private:
  std::int64_t order_;
  std::vector<std::int64_t> exponents_;
};

/// True iff the sum is exactly zero, i.e. Phi_n divides sum_a x^a.
bool root_sum_is_zero(const RootSum& s);

}  // namespace moran
