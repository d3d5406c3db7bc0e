#include "homology.tpp"

namespace ncproj {

#define NCPROJ_HOMOLOGY_INSTANTIATE(S)                                                                   \
  template class Algebra<S>;                                                                             \
  template struct GradedModulePresentation<S>;                                                           \
  template class GradedModule<S>;                                                                        \
  template struct FreeResolution<S>;                                                                     \
  template class ProjCohomology<S>;                                                                      \
  template GradedModulePresentation<S> syzygies(Algebra<S>&, ModuleSide, const std::vector<int>&,        \
                                                const std::vector<std::vector<NcPolynomial<S>>>&,        \
                                                const std::vector<int>&, int);                           \
  template FreeResolution<S> resolve(Algebra<S>&, const GradedModulePresentation<S>&, int, int);         \
  template GradedModulePresentation<S> trivial_module(Algebra<S>&, ModuleSide);                          \
  template GradedModulePresentation<S> truncation_quotient(Algebra<S>&, int, ModuleSide);                \
  template GradedModulePresentation<S> truncation_ideal(Algebra<S>&, int, int, ModuleSide);              \
  template GradedModulePresentation<S> free_module(std::vector<int>, ModuleSide);                        \
  template long graded_hom_dim(Algebra<S>&, const GradedModulePresentation<S>&, GradedModule<S>&, int);  \
  template long ext_dim(const FreeResolution<S>&, GradedModule<S>&, int, int);                           \
  template ResolutionReport minimal_resolution(Algebra<S>&, int, int);                                   \
  template GlobalDimension global_dimension(Algebra<S>&, int, int);                                      \
  template GradedDims ext_k_A(Algebra<S>&, int, int);                                                    \
  template GorensteinReport gorenstein_check(Algebra<S>&, int, int);                                     \
  template ChiProbeReport chi_probe(Algebra<S>&, const GradedModulePresentation<S>&, int, int);          \
  template CdReport cd_estimate(Algebra<S>&, int, int, int, int);                                        \
  template TruncationSequenceDims truncation_sequence(Algebra<S>&, const GradedModulePresentation<S>&,   \
                                                      int, int);

NCPROJ_HOMOLOGY_INSTANTIATE(Rational)
NCPROJ_HOMOLOGY_INSTANTIATE(Scalar)

std::string GlobalDimension::to_string() const {
  return finite ? std::to_string(value) : "AT_LEAST(" + std::to_string(value) + ")";
}

long GradedDims::total() const {
  long t = 0;
  for (long d : dims) t += d;
  return t;
}

long GradedDims::at(int ell) const {
  const int k = ell - lo;
  return k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0;
}

void stabilize(CohomologyCell& cell) {
  cell.stabilized.reset();
  cell.stabilization_n = 0;
  const int n = static_cast<int>(cell.values.size());
  if (n == 0) return;
  int s = n - 1;
  while (s > 0 && cell.values[s - 1] == cell.values[n - 1]) --s;
  if (n - s >= 3) {
    cell.stabilized = cell.values.back();
    cell.stabilization_n = s + 1;
  }
}

}  // namespace ncproj
