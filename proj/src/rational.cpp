#include "degen/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace degen {

void Rational::canonicalize(mpq_class& v) {
  if (sgn(v.get_den()) == 0) throw std::domain_error("rational with zero denominator");
  mpq_canonicalize(v.get_mpq_t());
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  mpq_canonicalize(v_.get_mpq_t());
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!digits_ok(text, true)) throw std::invalid_argument("malformed rational: " + std::string(text));
    if (text[0] == '+') text.remove_prefix(1);  // mpz rejects an explicit plus
    return raw(mpq_class(mpz_class(std::string(text)), 1));
  }
  auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (num[0] == '+') num.remove_prefix(1);
  const mpz_class num_z{std::string(num)};
  const mpz_class den_z{std::string(den)};
  if (sgn(den_z) == 0) throw std::invalid_argument("rational with zero denominator: " + std::string(text));
  mpq_class v(num_z, den_z);
  mpq_canonicalize(v.get_mpq_t());
  return raw(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return raw(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational::raw(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  const bool invert = e < 0;
  if (invert && base.is_zero()) throw std::domain_error("negative power of zero");
  const auto k = static_cast<unsigned long>(invert ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), k);
  mpq_class v = invert ? mpq_class(den, num) : mpq_class(num, den);
  mpq_canonicalize(v.get_mpq_t());  // sign may sit in the denominator after inversion
  return Rational(std::move(v));
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

}  // namespace degen
