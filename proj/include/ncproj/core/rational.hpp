#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ncproj/core/integer.hpp"

namespace ncproj {

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(Integer(v).mpz()) {}
  Rational(const Integer& v) : v_(v.mpz()) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p" or "p/q".
  static Rational parse(std::string_view text);
  /// Nearest rational with the given denominator; used for reporting estimates.
  static Rational approximate(long double value, long denominator);

  Integer num() const { return Integer(mpz_class(v_.get_num())); }
  Integer den() const { return Integer(mpz_class(v_.get_den())); }
  const mpq_class& mpq() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  long double to_long_double() const;
  std::string to_string() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
Rational inverse(const Rational& a);
Integer floor(const Rational& a);
Rational abs(const Rational& a);
Rational pow(const Rational& a, long exponent);
inline std::string to_string(const Rational& a) { return a.to_string(); }

}  // namespace ncproj
