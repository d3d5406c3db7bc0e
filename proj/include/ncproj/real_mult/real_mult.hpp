#pragma once

#include <string>
#include <vector>

#include "ncproj/heart/heart.hpp"
#include "ncproj/real_mult/quadratic.hpp"

namespace ncproj {

/// Integer 2x2 matrix of determinant 1, acting by fractional linear maps.
class SL2Matrix {
 public:
  SL2Matrix() : a_(1), b_(0), c_(0), d_(1) {}
  /// Throws DomainError unless ad - bc = 1.
  SL2Matrix(Integer a, Integer b, Integer c, Integer d);

  static SL2Matrix identity() { return {}; }
  /// Translation [[1,1],[0,1]].
  static SL2Matrix g() { return {Integer(1), Integer(1), Integer(0), Integer(1)}; }
  /// [[0,1],[-1,0]].
  static SL2Matrix h() { return {Integer(0), Integer(1), Integer(-1), Integer(0)}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer trace() const { return a_ + d_; }
  SL2Matrix inverse() const { return {d_, -b_, -c_, a_}; }
  SL2Matrix power(long k) const;

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
  /// "[[a,b],[c,d]]".
  std::string to_string() const;

 private:
  Integer a_, b_, c_, d_;
};

/// (a theta + b)/(c theta + d); throws DomainError on a zero denominator.
QuadraticNumber mobius_act(const SL2Matrix& m, const QuadraticNumber& theta);
Rational mobius_act(const SL2Matrix& m, const Rational& theta);

/// Power of one of the generators g, h.
struct GeneratorPower {
  char generator = 'g';
  Integer exponent;
  friend bool operator==(const GeneratorPower&, const GeneratorPower&) = default;
};
/// Product of the word, leftmost factor outermost.
SL2Matrix word_matrix(const std::vector<GeneratorPower>& word);
/// "g^-1 h g^2"; "1" for the empty word.
std::string word_to_string(const std::vector<GeneratorPower>& word);

struct CFExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
  int window = 0;  // partial quotients computed
  bool periodic() const { return !period.empty(); }
};

/// Continued fraction by exact floor-and-invert; the period is found by an
/// exact repeat of the complete quotient. Throws DomainError for rationals.
CFExpansion cf_expand(const QuadraticNumber& theta, int max_terms = 10000);
/// Value of a periodic expansion as an element of Q(sqrt(D)).
QuadraticNumber cf_value(const CFExpansion& cf, const Integer& D);

struct MoritaReduction {
  QuadraticNumber reduced;  // in (0, 1)
  std::vector<GeneratorPower> word;
};
/// theta - floor(theta), with the translation word carrying theta there.
MoritaReduction morita_reduce(const QuadraticNumber& theta);

/// -1/theta; throws DomainError at zero.
QuadraticNumber minus_inverse(const QuadraticNumber& theta);
Rational minus_inverse(const Rational& theta);

/// Hyperbolic matrix with positive eigenvalues fixing theta, built from the
/// period of the continued fraction.
SL2Matrix fixing_matrix(const QuadraticNumber& theta);

struct RmAlgebraReport {
  SL2Matrix F;
  Charge G;
  QuadraticNumber theta;
  std::string theta_label;
  std::vector<Charge> charges;  // F^n G, n = 1..n_max
  std::vector<Slope> slopes;
  std::vector<Integer> dims;    // dim A_n, n = 1..n_max
  bool recurrence_checked = false;
};

/// Hilbert function of the algebra attached to (F, G) on the heart at theta.
/// F acts on the column (deg, rank). Throws DomainError when F does not fix
/// theta with positive eigenvalues, when an orbit charge is not stable, or
/// when the orbit slopes are not strictly monotone on one side of theta.
RmAlgebraReport rm_hilbert(const SL2Matrix& F, const Charge& G, const QuadraticNumber& theta, int n_max,
                           std::string theta_label = "theta");

}  // namespace ncproj
