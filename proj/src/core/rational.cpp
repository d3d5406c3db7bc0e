#include "ncproj/core/rational.hpp"

#include <cmath>
#include <ostream>

#include "ncproj/core/errors.hpp"

namespace ncproj {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DivisionByZero();
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

Rational Rational::approximate(long double value, long denominator) {
  const long double scaled = std::nearbyint(value * static_cast<long double>(denominator));
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), static_cast<double>(scaled));
  return Rational(Integer(num), Integer(denominator));
}

long double Rational::to_long_double() const {
  return static_cast<long double>(v_.get_d());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

Rational inverse(const Rational& a) { return Rational(1) / a; }

Integer floor(const Rational& a) { return floor_div(a.num(), a.den()); }

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& a, long exponent) {
  if (exponent < 0) return pow(inverse(a), -exponent);
  Rational r(1);
  for (long i = 0; i < exponent; ++i) r *= a;
  return r;
}

}  // namespace ncproj
