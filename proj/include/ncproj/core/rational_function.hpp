#pragma once

#include <iosfwd>
#include <string>

#include "ncproj/core/qpoly.hpp"

namespace ncproj {

/// Element of Q(q): a reduced quotient of polynomials in the parameter q with
/// monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalFunction(const QPoly& num) : num_(num), den_(Rational(1)) {}
  RationalFunction(const QPoly& num, const QPoly& den);

  /// The parameter q itself.
  static RationalFunction q() { return RationalFunction(QPoly::variable()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Constant value; only valid when is_constant().
  Rational constant() const { return num_.coeff(0); }
  /// True when the leading coefficient of the numerator is negative.
  bool looks_negative() const { return num_.leading().sign() < 0; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// Parser-compatible rendering, e.g. "(q + 1)/q" or "2*q^2".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& a);

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RationalFunction& a) { return a.is_zero(); }
RationalFunction inverse(const RationalFunction& a);
inline std::string to_string(const RationalFunction& a) { return a.to_string(); }

}  // namespace ncproj
