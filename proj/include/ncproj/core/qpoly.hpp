#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncproj/core/rational.hpp"

namespace ncproj {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c);
  explicit QPoly(std::vector<Rational> coeffs);

  /// The monomial c * var^k.
  static QPoly monomial(const Rational& c, int k);
  static QPoly variable() { return monomial(Rational(1), 1); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  /// Number of nonzero coefficients.
  int term_count() const;
  const Rational& coeff(int k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational eval(const Rational& x) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& c) const;

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Renders with the given variable name, highest degree first, e.g. "q^2 - 1/2*q + 3".
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: a = quot * b + rem with deg rem < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly pow(const QPoly& a, int exponent);

}  // namespace ncproj
