#include "coord_rings.tpp"

namespace ncproj {

#define NCPROJ_COORD_RINGS_INSTANTIATE(S)                                                                 \
  template struct P1Automorphism<S>;                                                                     \
  template struct Section<S>;                                                                            \
  template Section<S> section_twist(const Section<S>&, const P1Automorphism<S>&);                        \
  template Section<S> thcr_multiply(const Section<S>&, const Section<S>&, const P1Automorphism<S>&, int); \
  template Section<S> gamma_h_multiply(const Section<S>&, const Section<S>&, const P1Automorphism<S>&,   \
                                       int);                                                             \
  template AlgebraPresentation<S> thcr_presentation(const P1Automorphism<S>&, int, const FieldTag&, int); \
  template Section<S> thcr_evaluate(const Word&, const P1Automorphism<S>&, int);

NCPROJ_COORD_RINGS_INSTANTIATE(Rational)
NCPROJ_COORD_RINGS_INSTANTIATE(Scalar)

}  // namespace ncproj
