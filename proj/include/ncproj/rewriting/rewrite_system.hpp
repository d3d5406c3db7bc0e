#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncproj/core/nc_polynomial.hpp"
#include "ncproj/rewriting/automaton.hpp"

namespace ncproj {

/// lead -> rhs, where lead - rhs is homogeneous and rhs only has smaller words.
template <ExactField S>
struct RewriteRule {
  Word lead;
  NcPolynomial<S> rhs;

  NcPolynomial<S> as_polynomial() const { return NcPolynomial<S>(lead) - rhs; }
};

/// An overlap whose S-polynomial does not reduce to zero.
template <ExactField S>
struct Obstruction {
  Word overlap;
  std::size_t left_rule;
  std::size_t right_rule;
  NcPolynomial<S> residue;
};

/// Two-sided Groebner basis of a homogeneous ideal, complete up to a degree
/// cutoff.
template <ExactField S>
class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, MonomialOrder order, int cutoff);

  const Alphabet& alphabet() const { return alphabet_; }
  const MonomialOrder& order() const { return order_; }
  int cutoff() const { return cutoff_; }
  const std::vector<RewriteRule<S>>& rules() const { return rules_; }

  NcPolynomial<S> normal_form(const NcPolynomial<S>& p) const;
  bool is_normal(const Word& w) const;
  /// Normal words of degree d sorted by the monomial order.
  std::vector<Word> normal_words(int d) const;
  /// dims[d] for d = 0..N.
  std::vector<Integer> hilbert_function(int N) const;
  bool ideal_member(const NcPolynomial<S>& p) const;

  /// Every overlap of degree <= cutoff whose S-polynomial fails to reduce
  /// to zero, plus any rule lead containing another. Empty after completion.
  std::vector<Obstruction<S>> confluence_audit() const;

  /// One "lead -> rhs" line per rule, rules sorted by lead.
  std::string serialize() const;

  /// Adds a monic, fully reduced relation as a rule and interreduces the
  /// tails of existing rules. Used by the completion procedure.
  void add_rule(const NcPolynomial<S>& reduced);

 private:
  void rebuild();
  void check_degree(int d) const;

  Alphabet alphabet_;
  MonomialOrder order_;
  int cutoff_;
  std::vector<RewriteRule<S>> rules_;
  PatternAutomaton automaton_;
};

template <ExactField S>
RewriteSystem<S> complete_truncated(const std::vector<NcPolynomial<S>>& relations,
                                    const Alphabet& alphabet, int cutoff,
                                    const MonomialOrder& order);

/// Degree-N estimate of the GK dimension from the growth of the filtration
/// F^n = A_0 + ... + A_n.
struct GrowthReport {
  int cutoff = 0;
  std::vector<Integer> dims;
  std::vector<Integer> filtration_dims;
  int window_lo = 0;
  int window_hi = 0;
  Rational ratio_threshold{3, 2};
  bool infinite = false;
  std::optional<Rational> estimate;
  long double estimate_value = 0;
  bool low_confidence = false;
};

GrowthReport growth_report(const std::vector<Integer>& dims);

template <ExactField S>
GrowthReport gk_estimate(const RewriteSystem<S>& R) {
  return growth_report(R.hilbert_function(R.cutoff()));
}

/// Leading-coefficient normalisation: divides by the coefficient of the
/// order-maximal word.
template <ExactField S>
NcPolynomial<S> make_monic(const NcPolynomial<S>& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  return p.scaled(inverse(p.lead(order).second));
}

extern template class RewriteSystem<Rational>;
extern template class RewriteSystem<Scalar>;
extern template RewriteSystem<Rational> complete_truncated(const std::vector<NcPolynomial<Rational>>&,
                                                           const Alphabet&, int, const MonomialOrder&);
extern template RewriteSystem<Scalar> complete_truncated(const std::vector<NcPolynomial<Scalar>>&,
                                                         const Alphabet&, int, const MonomialOrder&);

}  // namespace ncproj
