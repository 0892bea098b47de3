#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace degen {

/// Arbitrary-precision rational scalar, always canonical: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { canonicalize(v_); }

  /// Parses "p" or "p/q" with an optional leading sign on the numerator.
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inverse() const;

  Rational operator-() const { return raw(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return raw(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return raw(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return raw(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct raw_tag {};
  Rational(mpq_class v, raw_tag) : v_(std::move(v)) {}
  // GMP arithmetic preserves canonical form, so internal results skip the gcd.
  static Rational raw(mpq_class v) { return Rational(std::move(v), raw_tag{}); }
  static void canonicalize(mpq_class& v);

  mpq_class v_;
};

/// base^e for any integer e; negative e inverts (throws std::domain_error on
/// zero base with e < 0).
Rational pow(const Rational& base, long e);

Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

}  // namespace degen
