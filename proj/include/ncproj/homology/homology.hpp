#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncproj/homology/sparse.hpp"
#include "ncproj/rewriting/rewrite_system.hpp"

namespace ncproj {

enum class ModuleSide { left, right };

/// Degreewise view of A = T/I: normal-word bases and cached products.
template <ExactField S>
class Algebra {
 public:
  explicit Algebra(RewriteSystem<S> system);

  const RewriteSystem<S>& system() const { return R_; }
  const Alphabet& alphabet() const { return R_.alphabet(); }
  int cutoff() const { return R_.cutoff(); }
  int max_weight() const;

  /// Normal words of degree d in storage order; empty for d < 0.
  const std::vector<Word>& basis(int d);
  int dim(int d) { return static_cast<int>(basis(d).size()); }
  int index(int d, const Word& w);

  /// Normal form of a*w (left) or w*a (right).
  NcPolynomial<S> multiply(ModuleSide side, const NcPolynomial<S>& a, const Word& w);
  /// Normal form of x_l * w (left) or w * x_l (right) for a basis word w of degree d.
  const NcPolynomial<S>& letter_times(ModuleSide side, Letter l, int d, int idx);

 private:
  RewriteSystem<S> R_;
  std::map<int, std::vector<Word>> bases_;
  std::map<int, std::map<Word, int>> index_;
  std::map<std::tuple<int, Letter, int, int>, NcPolynomial<S>> letter_cache_;
};

/// Graded module given as the cokernel of a map of free modules: generators
/// e_j of degree shifts[j], and one relation row per relation, with entry
/// rows[k][j] in A_(m_k - shifts[j]).
template <ExactField S>
struct GradedModulePresentation {
  ModuleSide side = ModuleSide::left;
  std::vector<int> shifts;
  std::vector<std::vector<NcPolynomial<S>>> rows;
  std::vector<int> row_degrees;

  /// Computes row degrees and checks homogeneity against the shifts.
  static GradedModulePresentation make(ModuleSide side, std::vector<int> shifts,
                                       std::vector<std::vector<NcPolynomial<S>>> rows);
};

/// Degree pieces M_t = F_t / K_t of a presented module, built lazily.
template <ExactField S>
class GradedModule {
 public:
  GradedModule(Algebra<S>& A, GradedModulePresentation<S> p);

  const GradedModulePresentation<S>& presentation() const { return p_; }
  int dim(int t);
  /// a (homogeneous of degree e) acting on quotient basis vector q of M_t,
  /// in quotient coordinates of M_(t+e).
  SparseVec<S> act(const NcPolynomial<S>& a, int t, int q);
  /// Span of the generator multiples x_l K_(t - w_l) inside F_t.
  RowBasis<S> augmentation_part(int t);
  /// An element of F (one component per generator) of degree t as a vector of F_t.
  SparseVec<S> free_vector(int t, const std::vector<NcPolynomial<S>>& element);
  /// Generator letter acting on a vector of F_t, giving a vector of F_(t + w_l).
  SparseVec<S> letter_action(Letter l, int t, const SparseVec<S>& v);
  int free_dim(int t) { return static_cast<int>(layout(t).cells.size()); }
  /// (generator, word index) of an index of F_t.
  std::pair<int, int> cell(int t, int idx) { return layout(t).cells[idx]; }

 private:
  struct Piece {
    std::vector<int> offsets;
    std::vector<std::pair<int, int>> cells;  // F_t index -> (generator, word index)
    RowBasis<S> K;
    std::vector<int> quotient_index;  // F_t index -> quotient coordinate or -1
    std::vector<int> representative;  // quotient coordinate -> F_t index
  };
  Piece& piece(int t);
  Piece& layout(int t);

  Algebra<S>& A_;
  GradedModulePresentation<S> p_;
  std::map<int, Piece> pieces_;
  std::map<int, bool> built_;
};

/// Free resolution F_p -> ... -> F_0 computed up to an internal degree.
/// maps[i] (i >= 1) lists, for each generator of F_i, its image in F_(i-1).
template <ExactField S>
struct FreeResolution {
  ModuleSide side = ModuleSide::left;
  int top_degree = 0;
  std::vector<std::vector<int>> shifts;
  std::vector<std::vector<std::vector<NcPolynomial<S>>>> maps;

  int length_computed() const { return static_cast<int>(shifts.size()) - 1; }
  /// No differential entry has a nonzero constant term.
  bool is_minimal() const;
};

/// Minimal generators, up to degree top, of the kernel of the map F' -> F
/// sending generator k (of degree row_degrees[k]) to rows[k]; F has
/// generators of degrees target_shifts. The result presents the image.
template <ExactField S>
GradedModulePresentation<S> syzygies(Algebra<S>& A, ModuleSide side, const std::vector<int>& target_shifts,
                                     const std::vector<std::vector<NcPolynomial<S>>>& rows,
                                     const std::vector<int>& row_degrees, int top);

/// Minimal free resolution of the presented module, homological degree up to
/// p_max and internal degree up to top.
template <ExactField S>
FreeResolution<S> resolve(Algebra<S>& A, const GradedModulePresentation<S>& P, int p_max, int top);

template <ExactField S>
GradedModulePresentation<S> trivial_module(Algebra<S>& A, ModuleSide side = ModuleSide::left);
/// R / R_(>= n).
template <ExactField S>
GradedModulePresentation<S> truncation_quotient(Algebra<S>& A, int n, ModuleSide side = ModuleSide::left);
/// R_(>= n) with relations computed up to degree top.
template <ExactField S>
GradedModulePresentation<S> truncation_ideal(Algebra<S>& A, int n, int top, ModuleSide side = ModuleSide::left);
/// A itself, or A(-shift).
template <ExactField S>
GradedModulePresentation<S> free_module(std::vector<int> shifts, ModuleSide side = ModuleSide::left);

/// dim_k of degree-0 maps source -> target[d].
template <ExactField S>
long graded_hom_dim(Algebra<S>& A, const GradedModulePresentation<S>& source, GradedModule<S>& target, int d);

/// dim Ext^i(P, M)_d from a resolution of P computed to length >= i+1.
template <ExactField S>
long ext_dim(const FreeResolution<S>& F, GradedModule<S>& M, int i, int d);

struct ResolutionReport {
  std::vector<std::vector<int>> betti;
  int p_max = 0;
  int N = 0;
  bool minimal = true;
  bool terminated = false;  // F_(p+1) = 0 seen within p_max
};

template <ExactField S>
ResolutionReport minimal_resolution(Algebra<S>& A, int p_max, int N);

struct GlobalDimension {
  bool finite = false;
  int value = 0;  // the dimension, or the bound p_max
  std::string to_string() const;
};

template <ExactField S>
GlobalDimension global_dimension(Algebra<S>& A, int p_max, int N);

/// dims[k] = dim Ext^i(k, A) in degree -(lo + k); ell = -delta so that the
/// Koszul shift of Ext^d(k, A) appears at ell = d.
struct GradedDims {
  int lo = 0;
  std::vector<long> dims;
  long total() const;
  long at(int ell) const;
};

template <ExactField S>
GradedDims ext_k_A(Algebra<S>& A, int i, int N);

struct GorensteinReport {
  bool passes = false;
  std::optional<int> d;
  std::string reason;
  std::vector<long> ext_totals;  // total dim of Ext^i(k,A), i = 0..d
};

template <ExactField S>
GorensteinReport gorenstein_check(Algebra<S>& A, int p_max, int N);

struct ChiProbeReport {
  int j_max = 0;
  int d_lo = 0;
  int d_hi = 0;
  std::vector<std::vector<long>> dims;  // dims[j][d - d_lo] = dim Ext^j(k, M)_d
  bool right_bounded = false;
};

template <ExactField S>
ChiProbeReport chi_probe(Algebra<S>& A, const GradedModulePresentation<S>& M, int j_max, int N);

struct CohomologyCell {
  int j = 0;
  int d = 0;
  int n_max = 0;
  std::vector<long> values;  // values[n-1] for n = 1..n_max
  std::optional<long> stabilized;
  int stabilization_n = 0;
};

/// H^j(M)(d) through the truncations R_(>= n), n = 1..n_max, with per-n
/// resolutions cached across cells.
template <ExactField S>
class ProjCohomology {
 public:
  ProjCohomology(Algebra<S>& A, GradedModulePresentation<S> M);
  int required_cutoff(int j, int d, int n_max) const;
  CohomologyCell cell(int j, int d, int n_max);
  long value(int j, int d, int n);

 private:
  Algebra<S>& A_;
  GradedModule<S> M_;
  std::map<int, GradedModulePresentation<S>> ideals_;
  std::map<int, FreeResolution<S>> quotients_;
};

/// Terminal constant run of length >= 3 decides the stabilised value.
void stabilize(CohomologyCell& cell);

struct CdReport {
  int cd = -1;
  int j_max = 0;
  int d_lo = 0;
  int d_hi = 0;
  std::vector<CohomologyCell> cells;
};

/// Throws DomainError when some cell does not stabilise.
template <ExactField S>
CdReport cd_estimate(Algebra<S>& A, int j_max, int d_lo, int d_hi, int n_max);

/// Dimensions in degree t of the terms of
/// 0 -> Hom(R/R>=n, M) -> M -> Hom(R>=n, M) -> Ext^1(R/R>=n, M) -> 0.
struct TruncationSequenceDims {
  long hom_quotient = 0;
  long module = 0;
  long hom_ideal = 0;
  long ext1_quotient = 0;
  bool exact() const { return hom_quotient - module + hom_ideal - ext1_quotient == 0; }
};

template <ExactField S>
TruncationSequenceDims truncation_sequence(Algebra<S>& A, const GradedModulePresentation<S>& M, int n, int t);

#define NCPROJ_HOMOLOGY_EXTERN(S)                                                                               \
  extern template class Algebra<S>;                                                                             \
  extern template struct GradedModulePresentation<S>;                                                           \
  extern template class GradedModule<S>;                                                                        \
  extern template struct FreeResolution<S>;                                                                     \
  extern template class ProjCohomology<S>;                                                                      \
  extern template GradedModulePresentation<S> syzygies(Algebra<S>&, ModuleSide, const std::vector<int>&,        \
                                                       const std::vector<std::vector<NcPolynomial<S>>>&,        \
                                                       const std::vector<int>&, int);                           \
  extern template FreeResolution<S> resolve(Algebra<S>&, const GradedModulePresentation<S>&, int, int);         \
  extern template GradedModulePresentation<S> trivial_module(Algebra<S>&, ModuleSide);                          \
  extern template GradedModulePresentation<S> truncation_quotient(Algebra<S>&, int, ModuleSide);                \
  extern template GradedModulePresentation<S> truncation_ideal(Algebra<S>&, int, int, ModuleSide);              \
  extern template GradedModulePresentation<S> free_module(std::vector<int>, ModuleSide);                        \
  extern template long graded_hom_dim(Algebra<S>&, const GradedModulePresentation<S>&, GradedModule<S>&, int);  \
  extern template long ext_dim(const FreeResolution<S>&, GradedModule<S>&, int, int);                           \
  extern template ResolutionReport minimal_resolution(Algebra<S>&, int, int);                                   \
  extern template GlobalDimension global_dimension(Algebra<S>&, int, int);                                      \
  extern template GradedDims ext_k_A(Algebra<S>&, int, int);                                                    \
  extern template GorensteinReport gorenstein_check(Algebra<S>&, int, int);                                     \
  extern template ChiProbeReport chi_probe(Algebra<S>&, const GradedModulePresentation<S>&, int, int);          \
  extern template CdReport cd_estimate(Algebra<S>&, int, int, int, int);                                        \
  extern template TruncationSequenceDims truncation_sequence(Algebra<S>&, const GradedModulePresentation<S>&,   \
                                                             int, int);

NCPROJ_HOMOLOGY_EXTERN(Rational)
NCPROJ_HOMOLOGY_EXTERN(Scalar)
#undef NCPROJ_HOMOLOGY_EXTERN

}  // namespace ncproj
