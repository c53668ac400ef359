#include "moran/exactmath.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace moran {

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::x_pow_minus_one(std::int64_t n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  return IntPoly(std::move(c));
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1) {
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  }
  const int dd = divisor.degree();
  std::vector<BigInt> rem = coeffs_;
  if (degree() < dd) return {IntPoly(), *this};
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int i = degree(); i >= dd; --i) {
    const BigInt lead = rem[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = lead;
    for (int j = 0; j <= dd; ++j) {
      const BigInt& c = divisor.coeffs_[static_cast<std::size_t>(j)];
      if (c != 0) rem[static_cast<std::size_t>(i - dd + j)] -= lead * c;
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly cyclotomic_poly(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  // Phi_d for every divisor d of n, ascending; each is x^d - 1 divided by
  // the cyclotomic factors of its proper divisors.
  std::map<std::int64_t, IntPoly> phi;
  for (const std::int64_t d : divisors(n)) {
    IntPoly p = IntPoly::x_pow_minus_one(d);
    for (const auto& [e, pe] : phi) {
      if (d % e != 0) continue;
      auto [q, r] = p.divmod_monic(pe);
      if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
      p = std::move(q);
    }
    phi.emplace(d, std::move(p));
  }
  return phi.at(n);
}

RootSum::RootSum(std::int64_t order, std::span<const std::int64_t> exponents) : order_(order) {
  if (order < 1) throw std::invalid_argument("RootSum: order must be >= 1");
  if (exponents.empty()) throw std::invalid_argument("RootSum: empty exponent multiset");
  exponents_.reserve(exponents.size());
  for (const std::int64_t a : exponents) {
    std::int64_t r = a % order;
    if (r < 0) r += order;
    exponents_.push_back(r);
  }
  std::sort(exponents_.begin(), exponents_.end());
}

bool root_sum_is_zero(const RootSum& s) {
  const std::int64_t n = s.order();
  // Common factor g of n and every exponent: the sum equals the same sum over
  // (n/g)-th roots with exponents a/g.
  std::int64_t g = n;
  for (const std::int64_t a : s.exponents()) g = gcd(g, a);
  const std::int64_t order = n / g;

  std::vector<BigInt> coeffs(static_cast<std::size_t>(order), 0);
  for (const std::int64_t a : s.exponents()) coeffs[static_cast<std::size_t>(a / g)] += 1;
  const IntPoly p(std::move(coeffs));
  if (p.is_zero()) return true;
  return p.divmod_monic(cyclotomic_poly(order)).second.is_zero();
}

}  // namespace moran
