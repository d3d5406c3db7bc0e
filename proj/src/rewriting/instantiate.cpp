#include "rewrite_system.tpp"

namespace ncproj {

template class RewriteSystem<Rational>;
template class RewriteSystem<Scalar>;
template RewriteSystem<Rational> complete_truncated(const std::vector<NcPolynomial<Rational>>&,
                                                    const Alphabet&, int, const MonomialOrder&);
template RewriteSystem<Scalar> complete_truncated(const std::vector<NcPolynomial<Scalar>>&,
                                                  const Alphabet&, int, const MonomialOrder&);

}  // namespace ncproj
