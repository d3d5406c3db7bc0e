#pragma once

#include <string>
#include <vector>

#include "ncproj/presentations/presentation.hpp"

namespace ncproj {

/// u -> (a u + b)/(c u + d) on the projective line.
template <ExactField S>
struct P1Automorphism {
  S a, b, c, d;

  P1Automorphism() : a(1), b(0), c(0), d(1) {}
  /// Throws DomainError when ad - bc = 0.
  P1Automorphism(S a, S b, S c, S d);

  static P1Automorphism identity() { return {}; }
  S determinant() const { return a * d - b * c; }
  /// Matrix product; the map of (*this) * other is u -> this(other(u)).
  P1Automorphism operator*(const P1Automorphism& other) const;
  P1Automorphism power(int k) const;
  friend bool operator==(const P1Automorphism&, const P1Automorphism&) = default;
};

/// Global section of O(n): a polynomial of degree <= n in the affine coordinate u.
template <ExactField S>
struct Section {
  int level = 0;
  std::vector<S> coeffs;  // coeffs[i] multiplies u^i; size level + 1

  Section() : coeffs{S(1)} {}
  Section(int level, std::vector<S> coeffs);
  static Section monomial(int level, int i, const S& c = S(1));
  bool is_zero() const;
  friend bool operator==(const Section&, const Section&) = default;
};

/// (c u + d)^n g((a u + b)/(c u + d)).
template <ExactField S>
Section<S> section_twist(const Section<S>& g, const P1Automorphism<S>& sigma);

/// f * g^(sigma^m), m the degree of f in the coordinate ring of O(k).
template <ExactField S>
Section<S> thcr_multiply(const Section<S>& f, const Section<S>& g, const P1Automorphism<S>& sigma, int k = 1);

/// The rule a * b = sigma^n(a) b with n the degree of b: the opposite ring of
/// thcr_multiply.
template <ExactField S>
Section<S> gamma_h_multiply(const Section<S>& a, const Section<S>& b, const P1Automorphism<S>& sigma, int k = 1);

/// Presentation of B(P^1, sigma, O(k)) on the basis 1, u, ..., u^k of level k,
/// with relations found up to degree d_max. Generators are x, y for k = 1 and
/// x0..xk otherwise.
template <ExactField S>
AlgebraPresentation<S> thcr_presentation(const P1Automorphism<S>& sigma, int d_max, const FieldTag& field,
                                         int k = 1);

/// Image of a free word in the twisted coordinate ring.
template <ExactField S>
Section<S> thcr_evaluate(const Word& w, const P1Automorphism<S>& sigma, int k = 1);

struct TwoPointTriple {
  int r1 = 1;
  int r2 = 0;
  /// Throws DomainError unless r1, r2 >= 0 and r1 + r2 >= 1.
  void validate() const;
};

/// dim A_n = dim Hom(V, s^n V) for V = k1^r1 + k2^r2 and s swapping the points.
std::vector<long> two_point_hilbert(const TwoPointTriple& t, int n_max);

#define NCPROJ_COORD_RINGS_EXTERN(S)                                                                         \
  extern template struct P1Automorphism<S>;                                                                 \
  extern template struct Section<S>;                                                                        \
  extern template Section<S> section_twist(const Section<S>&, const P1Automorphism<S>&);                    \
  extern template Section<S> thcr_multiply(const Section<S>&, const Section<S>&, const P1Automorphism<S>&,  \
                                           int);                                                            \
  extern template Section<S> gamma_h_multiply(const Section<S>&, const Section<S>&,                         \
                                              const P1Automorphism<S>&, int);                               \
  extern template AlgebraPresentation<S> thcr_presentation(const P1Automorphism<S>&, int, const FieldTag&,  \
                                                           int);                                            \
  extern template Section<S> thcr_evaluate(const Word&, const P1Automorphism<S>&, int);

NCPROJ_COORD_RINGS_EXTERN(Rational)
NCPROJ_COORD_RINGS_EXTERN(Scalar)
#undef NCPROJ_COORD_RINGS_EXTERN

}  // namespace ncproj
