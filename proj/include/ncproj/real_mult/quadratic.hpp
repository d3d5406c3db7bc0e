#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "ncproj/core/integer.hpp"
#include "ncproj/core/rational.hpp"

namespace ncproj {

/// Element (p + s*sqrt(D))/q of the real quadratic field Q(sqrt(D)).
///
/// D is a squarefree integer > 1 and identifies the field; q > 0 and
/// gcd(p, s, q) = 1. Rational elements (s = 0) still carry D so that field
/// membership stays explicit.
class QuadraticNumber {
 public:
  /// Zero of Q(sqrt(D)).
  explicit QuadraticNumber(const Integer& D);
  /// (p + s*sqrt(D))/q; a non-squarefree D is reduced by moving square factors into s.
  QuadraticNumber(const Integer& p, const Integer& s, const Integer& D, const Integer& q);
  QuadraticNumber(const Rational& r, const Integer& D);

  /// sqrt(D) as an element of its field.
  static QuadraticNumber sqrt(const Integer& D) { return {Integer(0), Integer(1), D, Integer(1)}; }

  const Integer& p() const { return p_; }
  const Integer& s() const { return s_; }
  const Integer& q() const { return q_; }
  const Integer& D() const { return D_; }

  bool is_zero() const { return p_.is_zero() && s_.is_zero(); }
  bool is_one() const { return s_.is_zero() && p_ == q_; }
  bool is_rational() const { return s_.is_zero(); }
  /// Rational value; only valid when is_rational().
  Rational rational() const { return Rational(p_, q_); }
  int sign() const;
  long double approx() const;

  /// Integer coefficients (a, b, c), gcd 1 and a > 0, of the minimal quadratic
  /// a*x^2 + b*x + c vanishing at this number; requires s != 0.
  void minimal_polynomial(Integer& a, Integer& b, Integer& c) const;
  /// Galois conjugate (p - s*sqrt(D))/q.
  QuadraticNumber conjugate() const { return {p_, -s_, D_, q_}; }

  QuadraticNumber operator-() const { return {-p_, -s_, D_, q_}; }
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this += -o; }
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);
  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) = default;
  /// Exact real ordering; both operands must lie in the same field.
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

  /// Renders as "(p + s*sqrt(D))/q" with the usual simplifications.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& a);

 private:
  void normalize();
  void require_same_field(const QuadraticNumber& o) const;
  Integer p_, s_, q_, D_;
};

inline bool is_zero(const QuadraticNumber& a) { return a.is_zero(); }
QuadraticNumber inverse(const QuadraticNumber& a);
/// Exact floor of the real value.
Integer floor(const QuadraticNumber& a);
/// Sign of (x - r) for a rational r.
int compare(const QuadraticNumber& x, const Rational& r);
inline std::string to_string(const QuadraticNumber& a) { return a.to_string(); }

}  // namespace ncproj
