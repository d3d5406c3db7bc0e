#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncproj/core/endomorphism.hpp"
#include "ncproj/rewriting/rewrite_system.hpp"

namespace ncproj {

/// Connected graded algebra k<generators>/(relations).
template <ExactField S>
struct AlgebraPresentation {
  std::string name;
  FieldTag field;
  Alphabet alphabet;
  std::vector<NcPolynomial<S>> relations;
  MonomialOrder order;

  /// Throws DomainError unless every relation is nonzero, homogeneous in the
  /// declared weights and written in the declared generators.
  void validate() const;
  int max_relation_degree() const;
};

template <ExactField S>
RewriteSystem<S> build(const AlgebraPresentation<S>& p, int cutoff);

/// True when sigma maps every relation into the ideal, checked up to the cutoff.
template <ExactField S>
bool check_automorphism(const AlgebraPresentation<S>& p, const GradedEndomorphism<S>& sigma, int cutoff);

/// Coordinates of the image of a word in a fixed basis of the target's
/// degree-|w| piece.
template <ExactField S>
using WordEvaluation = std::function<std::vector<S>(const Word&)>;

/// Minimal homogeneous generators, degree by degree up to s_max, of the kernel
/// of a graded linear map out of the free algebra. Each relation is
/// leading-monic and the relations of one degree are mutually reduced.
template <ExactField S>
std::vector<NcPolynomial<S>> relations_from_evaluation(const Alphabet& alphabet, const MonomialOrder& order,
                                                       int s_max, const WordEvaluation<S>& eval);

/// Presentation of the twisted algebra with a * b = a sigma^deg(a)(b).
/// s_max defaults to one more than the largest relation degree of p.
template <ExactField S>
AlgebraPresentation<S> twist(const AlgebraPresentation<S>& p, const GradedEndomorphism<S>& sigma, int cutoff,
                             std::optional<int> s_max = std::nullopt);

enum class StandardStatus { standard, not_standard, ambiguous, not_applicable };
std::string to_string(StandardStatus s);

template <ExactField S>
struct StandardCheckReport {
  StandardStatus status = StandardStatus::not_applicable;
  std::string reason;
  int r = 0;
  int s = 0;
  /// m[i][j]: part of relation i ending in generator j, with that letter removed.
  std::vector<std::vector<NcPolynomial<S>>> M;
  std::optional<DenseMatrix<S>> Q;
  /// Relations the check succeeded with: the input ones, or C f for the
  /// recombination matrix C when the input ordering admits no Q.
  std::vector<NcPolynomial<S>> relations;
  std::optional<DenseMatrix<S>> C;
  bool is_standard() const { return status == StandardStatus::standard || status == StandardStatus::ambiguous; }
};

template <ExactField S>
StandardCheckReport<S> standard_check(const AlgebraPresentation<S>& p);

/// Whether H_A(t) (1 - r t + r t^s - t^(s+1)) = 1 modulo t^(N+1).
template <ExactField S>
bool resolution_shape_check(const AlgebraPresentation<S>& p, int r, int s, int N);

/// Truncated product of integer power series.
std::vector<Integer> series_product(const std::vector<Integer>& a, const std::vector<Integer>& b, int N);

#define NCPROJ_PRESENTATION_EXTERN(S)                                                                         \
  extern template struct AlgebraPresentation<S>;                                                             \
  extern template RewriteSystem<S> build(const AlgebraPresentation<S>&, int);                                \
  extern template bool check_automorphism(const AlgebraPresentation<S>&, const GradedEndomorphism<S>&, int); \
  extern template std::vector<NcPolynomial<S>> relations_from_evaluation(                                   \
      const Alphabet&, const MonomialOrder&, int, const WordEvaluation<S>&);                                 \
  extern template AlgebraPresentation<S> twist(const AlgebraPresentation<S>&, const GradedEndomorphism<S>&,  \
                                               int, std::optional<int>);                                     \
  extern template StandardCheckReport<S> standard_check(const AlgebraPresentation<S>&);                      \
  extern template bool resolution_shape_check(const AlgebraPresentation<S>&, int, int, int);

NCPROJ_PRESENTATION_EXTERN(Rational)
NCPROJ_PRESENTATION_EXTERN(Scalar)
#undef NCPROJ_PRESENTATION_EXTERN

}  // namespace ncproj
