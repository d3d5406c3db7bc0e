#pragma once

#include <map>

#include "ncproj/presentations/presentation.hpp"

namespace ncproj {

template <ExactField S>
void AlgebraPresentation<S>::validate() const {
  for (const auto& r : relations) {
    if (r.is_zero()) throw DomainError("zero relation in presentation '" + name + "'");
    for (const auto& [w, c] : r.terms()) {
      for (Letter l : w.letters()) {
        if (l >= alphabet.size()) throw DomainError("relation uses an unknown generator");
      }
    }
    if (!r.is_homogeneous()) {
      throw DomainError("relation " + r.to_string(alphabet, order) + " is not homogeneous");
    }
  }
}

template <ExactField S>
int AlgebraPresentation<S>::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations) d = std::max(d, r.degree());
  return d;
}

template <ExactField S>
RewriteSystem<S> build(const AlgebraPresentation<S>& p, int cutoff) {
  p.validate();
  return complete_truncated(p.relations, p.alphabet, cutoff, p.order);
}

namespace detail {

template <ExactField S>
void require_linear_action(const AlgebraPresentation<S>& p, const GradedEndomorphism<S>& sigma) {
  if (!p.alphabet.all_unit_weight()) throw DomainError("automorphisms need all generators of weight 1");
  if (static_cast<std::size_t>(sigma.dimension()) != p.alphabet.size()) {
    throw DomainError("automorphism dimension does not match the number of generators");
  }
  if (!sigma.is_invertible()) throw DomainError("automorphism matrix is singular");
}

}  // namespace detail

template <ExactField S>
bool check_automorphism(const AlgebraPresentation<S>& p, const GradedEndomorphism<S>& sigma, int cutoff) {
  detail::require_linear_action(p, sigma);
  const auto R = build(p, cutoff);
  for (const auto& r : p.relations) {
    if (!R.ideal_member(sigma.apply(r))) return false;
  }
  return true;
}

template <ExactField S>
std::vector<NcPolynomial<S>> relations_from_evaluation(const Alphabet& alphabet, const MonomialOrder& order,
                                                       int s_max, const WordEvaluation<S>& eval) {
  std::vector<NcPolynomial<S>> found;
  for (int s = 1; s <= s_max; ++s) {
    const auto G = complete_truncated(found, alphabet, s, order);
    auto words = G.normal_words(s);
    if (words.empty()) continue;
    std::reverse(words.begin(), words.end());  // descending, so pivots land on leading words
    std::vector<std::vector<S>> columns;
    std::size_t rows = 0;
    for (const auto& w : words) {
      columns.push_back(eval(w));
      rows = std::max(rows, columns.back().size());
    }
    DenseMatrix<S> E(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(words.size()));
    E.setConstant(S(0));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (std::size_t i = 0; i < columns[j].size(); ++i) E(i, j) = columns[j][i];
    }
    const DenseMatrix<S> K = kernel(E);
    if (K.cols() == 0) continue;
    DenseMatrix<S> Kt = K.transpose();
    const auto pivots = row_reduce(Kt);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      NcPolynomial<S> rel;
      for (Eigen::Index j = 0; j < Kt.cols(); ++j) rel.add_term(words[j], Kt(static_cast<Eigen::Index>(r), j));
      found.push_back(std::move(rel));
    }
  }
  return found;
}

template <ExactField S>
AlgebraPresentation<S> twist(const AlgebraPresentation<S>& p, const GradedEndomorphism<S>& sigma, int cutoff,
                             std::optional<int> s_max) {
  detail::require_linear_action(p, sigma);
  const int top = s_max.value_or(p.max_relation_degree() + 1);
  if (top > cutoff) throw CutoffExceeded(top, cutoff);
  const auto R = build(p, cutoff);
  for (const auto& r : p.relations) {
    if (!R.ideal_member(sigma.apply(r))) {
      throw DomainError("sigma does not descend to '" + p.name + "': image of " +
                        r.to_string(p.alphabet, p.order) + " is not in the ideal");
    }
  }

  // images[k][i] = normal form of sigma^k(x_i)
  std::vector<std::vector<NcPolynomial<S>>> images;
  GradedEndomorphism<S> power = GradedEndomorphism<S>::identity(sigma.dimension());
  for (int k = 0; k < top; ++k) {
    std::vector<NcPolynomial<S>> row;
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) row.push_back(R.normal_form(power.image(static_cast<Letter>(i))));
    images.push_back(std::move(row));
    power = sigma.compose(power);
  }
  std::map<int, std::map<Word, std::size_t>> basis_index;
  auto index_of = [&](int d) -> const std::map<Word, std::size_t>& {
    auto it = basis_index.find(d);
    if (it != basis_index.end()) return it->second;
    std::map<Word, std::size_t> idx;
    for (const auto& w : R.normal_words(d)) idx.emplace(w, idx.size());
    return basis_index.emplace(d, std::move(idx)).first->second;
  };

  WordEvaluation<S> eval = [&](const Word& w) {
    NcPolynomial<S> acc(S(1));
    for (std::size_t k = 0; k < w.size(); ++k) acc = R.normal_form(acc * images[k][w[k]]);
    const auto& idx = index_of(w.degree());
    std::vector<S> coords(idx.size(), S(0));
    for (const auto& [word, c] : acc.terms()) coords[idx.at(word)] = c;
    return coords;
  };

  AlgebraPresentation<S> out = p;
  out.name = p.name + "_twisted";
  out.relations = relations_from_evaluation(p.alphabet, p.order, top, eval);
  return out;
}

namespace detail {

template <ExactField S>
std::vector<std::vector<NcPolynomial<S>>> right_letter_matrix(const std::vector<NcPolynomial<S>>& rels,
                                                              const Alphabet& alphabet) {
  const std::size_t r = alphabet.size();
  std::vector<std::vector<NcPolynomial<S>>> M(rels.size(), std::vector<NcPolynomial<S>>(r));
  for (std::size_t i = 0; i < rels.size(); ++i) {
    for (const auto& [w, c] : rels[i].terms()) M[i][w.letters().back()].add_term(w.sub(0, w.size() - 1, alphabet), c);
  }
  return M;
}

/// Deterministic small-integer probe sequence.
struct Probe {
  unsigned state = 12345;
  int next() {
    state = state * 1103515245u + 12345u;
    return static_cast<int>((state >> 16) % 7) - 3;
  }
};

template <ExactField S>
class WordRows {
 public:
  Eigen::Index operator()(const Word& w) { return rows_.try_emplace(w, static_cast<Eigen::Index>(rows_.size())).first->second; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(rows_.size()); }

 private:
  std::map<Word, Eigen::Index> rows_;
};

/// Literal check of g = x^t M against the relations in the given order.
template <ExactField S>
void literal_standard_check(StandardCheckReport<S>& rep, const std::vector<NcPolynomial<S>>& f) {
  const int r = rep.r;
  std::vector<NcPolynomial<S>> g(r);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) g[j] += NcPolynomial<S>(Word({static_cast<Letter>(i)})) * rep.M[i][j];
  }
  WordRows<S> rows;
  for (const auto& p : f)
    for (const auto& [w, c] : p.terms()) rows(w);
  for (const auto& p : g)
    for (const auto& [w, c] : p.terms()) rows(w);
  DenseMatrix<S> F(rows.size(), r);
  F.setConstant(S(0));
  for (int k = 0; k < r; ++k)
    for (const auto& [w, c] : f[k].terms()) F(rows(w), k) = c;

  DenseMatrix<S> particular(r, r);
  for (int j = 0; j < r; ++j) {
    DenseVector<S> b(rows.size());
    b.setConstant(S(0));
    for (const auto& [w, c] : g[j].terms()) b(rows(w)) = c;
    const auto sol = solve(F, b);
    if (!sol) {
      rep.status = StandardStatus::not_standard;
      rep.reason = "g_" + std::to_string(j + 1) + " is not a combination of the relations";
      return;
    }
    particular.row(j) = sol->transpose();
  }
  const DenseMatrix<S> K = kernel(F);
  if (K.cols() == 0) {
    const bool invertible = !is_zero(determinant(particular));
    rep.status = invertible ? StandardStatus::standard : StandardStatus::not_standard;
    rep.reason = invertible ? "" : "Q is singular";
    rep.Q = particular;
    return;
  }
  Probe probe;
  for (int attempt = 0; attempt < 64; ++attempt) {
    DenseMatrix<S> Q = particular;
    for (int j = 0; j < r; ++j) {
      for (Eigen::Index k = 0; k < K.cols(); ++k) {
        const int t = probe.next();
        if (t != 0) Q.row(j) += (K.col(k) * S(t)).transpose();
      }
    }
    if (!is_zero(determinant(Q))) {
      rep.status = StandardStatus::ambiguous;
      rep.reason = "Q is not unique";
      return;
    }
  }
  rep.status = StandardStatus::not_standard;
  rep.reason = "no invertible Q found";
}

/// Searches for invertible C and P with x^t (C M) = (P f)^t, which is linear
/// in the entries of C and P. On success the recombined relations C f satisfy
/// the literal identity with Q = P C^-1.
template <ExactField S>
bool recombined_standard_check(StandardCheckReport<S>& rep, const std::vector<NcPolynomial<S>>& f,
                               const Alphabet& alphabet) {
  const int r = rep.r;
  const Eigen::Index unknowns = 2 * r * r;
  auto c_index = [&](int i, int k) { return static_cast<Eigen::Index>(i * r + k); };
  auto p_index = [&](int j, int k) { return static_cast<Eigen::Index>(r * r + j * r + k); };
  // equation (j, w): sum_{i,k} C_ik coeff_w(x_i M_kj) - sum_k P_jk coeff_w(f_k) = 0
  std::vector<std::map<Word, std::vector<std::pair<Eigen::Index, S>>>> eqs(r);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) {
      for (int k = 0; k < r; ++k) {
        const auto prod = NcPolynomial<S>(Word({static_cast<Letter>(i)})) * rep.M[k][j];
        for (const auto& [w, c] : prod.terms()) eqs[j][w].emplace_back(c_index(i, k), c);
      }
    }
    for (int k = 0; k < r; ++k)
      for (const auto& [w, c] : f[k].terms()) eqs[j][w].emplace_back(p_index(j, k), -c);
  }
  Eigen::Index rows = 0;
  for (const auto& e : eqs) rows += static_cast<Eigen::Index>(e.size());
  DenseMatrix<S> A(rows, unknowns);
  A.setConstant(S(0));
  Eigen::Index row = 0;
  for (const auto& e : eqs) {
    for (const auto& [w, entries] : e) {
      for (const auto& [col, c] : entries) A(row, col) = A(row, col) + c;
      ++row;
    }
  }
  const DenseMatrix<S> K = kernel(A);
  if (K.cols() == 0) return false;
  Probe probe;
  for (int attempt = 0; attempt < 64; ++attempt) {
    DenseVector<S> v(unknowns);
    v.setConstant(S(0));
    for (Eigen::Index k = 0; k < K.cols(); ++k) {
      const int t = attempt == 0 && K.cols() == 1 ? 1 : probe.next();
      if (t != 0) v += K.col(k) * S(t);
    }
    DenseMatrix<S> C(r, r), P(r, r);
    for (int i = 0; i < r; ++i) {
      for (int k = 0; k < r; ++k) {
        C(i, k) = v(c_index(i, k));
        P(i, k) = v(p_index(i, k));
      }
    }
    const auto Cinv = inverse_matrix(C);
    if (!Cinv || is_zero(determinant(P))) continue;
    std::vector<NcPolynomial<S>> h(r);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) h[i] += f[k].scaled(C(i, k));
    StandardCheckReport<S> again;
    again.r = r;
    again.s = rep.s;
    again.M = right_letter_matrix(h, alphabet);
    literal_standard_check(again, h);
    if (again.status != StandardStatus::standard && again.status != StandardStatus::ambiguous) continue;
    again.relations = std::move(h);
    again.C = C;
    again.reason = "relations recombined";
    rep = std::move(again);
    return true;
  }
  return false;
}

}  // namespace detail

template <ExactField S>
StandardCheckReport<S> standard_check(const AlgebraPresentation<S>& p) {
  StandardCheckReport<S> rep;
  p.validate();
  const int r = static_cast<int>(p.alphabet.size());
  rep.r = r;
  rep.s = p.relations.empty() ? 0 : p.relations.front().degree();
  if (!p.alphabet.all_unit_weight()) {
    rep.reason = "generators must have weight 1";
    return rep;
  }
  if (static_cast<int>(p.relations.size()) != r) {
    rep.reason = "needs as many relations as generators";
    return rep;
  }
  for (const auto& f : p.relations) {
    if (f.degree() != rep.s) {
      rep.reason = "relations must share one degree";
      return rep;
    }
  }
  if (!((r == 2 && rep.s == 3) || (r == 3 && rep.s == 2))) {
    rep.reason = "(r, s) = (" + std::to_string(r) + ", " + std::to_string(rep.s) + ") is not (2, 3) or (3, 2)";
    return rep;
  }
  rep.M = detail::right_letter_matrix(p.relations, p.alphabet);
  rep.relations = p.relations;
  detail::literal_standard_check(rep, p.relations);
  if (rep.status == StandardStatus::not_standard) detail::recombined_standard_check(rep, p.relations, p.alphabet);
  return rep;
}

template <ExactField S>
bool resolution_shape_check(const AlgebraPresentation<S>& p, int r, int s, int N) {
  const auto H = build(p, N).hilbert_function(N);
  std::vector<Integer> factor(static_cast<std::size_t>(std::max(N, s + 1)) + 1, Integer(0));
  factor[0] += Integer(1);
  factor[1] -= Integer(r);
  factor[s] += Integer(r);
  factor[s + 1] -= Integer(1);
  const auto prod = series_product(H, factor, N);
  for (int d = 0; d <= N; ++d) {
    if (prod[d] != Integer(d == 0 ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace ncproj
