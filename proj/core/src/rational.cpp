#include "moran/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace moran {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt r = boost::multiprecision::abs(a) / gcd(a, b) * boost::multiprecision::abs(b);
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  const BigInt am = boost::multiprecision::abs(m);
  BigInt r = a % am;
  if (r < 0) r += am;
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  BigInt n;
  BigInt d = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(s, n)
                      : parse_integer(trim(s.substr(0, slash)), n) &&
                            parse_integer(trim(s.substr(slash + 1)), d);
  if (!ok) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(std::move(n), std::move(d));
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(den_, num_);
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

double Rational::to_double() const {
  // Scale so that both parts fit comfortably in a double's exponent range.
  const auto nbits = num_ == 0 ? 0u : boost::multiprecision::msb(boost::multiprecision::abs(num_));
  const auto dbits = boost::multiprecision::msb(den_);
  if (nbits < 1000 && dbits < 1000) {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }
  const long shift_n = static_cast<long>(nbits) > 60 ? static_cast<long>(nbits) - 60 : 0;
  const long shift_d = static_cast<long>(dbits) > 60 ? static_cast<long>(dbits) - 60 : 0;
  const double n = BigInt(num_ >> shift_n).convert_to<double>();
  const double d = BigInt(den_ >> shift_d).convert_to<double>();
  return std::ldexp(n / d, static_cast<int>(shift_n - shift_d));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    return a.num_ == b.num_ ? std::strong_ordering::equal
           : a.num_ < b.num_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  return lhs == rhs ? std::strong_ordering::equal
         : lhs < rhs ? std::strong_ordering::less
                     : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace moran
