#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace moran {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number n/d kept in lowest terms with d > 0.
///
/// Zero is always stored as 0/1, so structural equality of the two
/// integer fields is equality of the rational values.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT(implicit)
  Rational(int n) : num_(n), den_(1) {}                // NOLINT(implicit)
  Rational(BigInt n, BigInt d);

  /// Parses "n", "-n" or "n/d" (decimal). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational abs() const { return num_ < 0 ? Rational(-*this) : *this; }
  Rational reciprocal() const;
  /// Largest integer not exceeding the value.
  BigInt floor() const;
  /// Value in [0, 1) congruent to *this modulo 1.
  Rational frac() const;

  double to_double() const;
  /// "n/d" in lowest terms; integers print without the "/1".
  std::string str() const;

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Floor modulus for integers: result in [0, |m|).
BigInt floor_mod(const BigInt& a, const BigInt& m);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const BigInt& v);

}  // namespace moran
