#include "presentation.tpp"

namespace ncproj {

#define NCPROJ_PRESENTATION_INSTANTIATE(S)                                                              \
  template struct AlgebraPresentation<S>;                                                              \
  template RewriteSystem<S> build(const AlgebraPresentation<S>&, int);                                 \
  template bool check_automorphism(const AlgebraPresentation<S>&, const GradedEndomorphism<S>&, int);  \
  template std::vector<NcPolynomial<S>> relations_from_evaluation(const Alphabet&, const MonomialOrder&, \
                                                                  int, const WordEvaluation<S>&);       \
  template AlgebraPresentation<S> twist(const AlgebraPresentation<S>&, const GradedEndomorphism<S>&, int, \
                                        std::optional<int>);                                            \
  template StandardCheckReport<S> standard_check(const AlgebraPresentation<S>&);                       \
  template bool resolution_shape_check(const AlgebraPresentation<S>&, int, int, int);

NCPROJ_PRESENTATION_INSTANTIATE(Rational)
NCPROJ_PRESENTATION_INSTANTIATE(Scalar)

std::vector<Integer> series_product(const std::vector<Integer>& a, const std::vector<Integer>& b, int N) {
  std::vector<Integer> out(static_cast<std::size_t>(N) + 1, Integer(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= N; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= N; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string to_string(StandardStatus s) {
  switch (s) {
    case StandardStatus::standard: return "STANDARD";
    case StandardStatus::not_standard: return "NOT_STANDARD";
    case StandardStatus::ambiguous: return "AMBIGUOUS";
    case StandardStatus::not_applicable: return "NOT_APPLICABLE";
  }
  return "";
}

}  // namespace ncproj
