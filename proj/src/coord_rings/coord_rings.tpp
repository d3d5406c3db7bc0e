#pragma once

#include "ncproj/coord_rings/coord_rings.hpp"
#include "ncproj/core/errors.hpp"

namespace ncproj {

namespace detail {

template <ExactField S>
std::vector<S> poly_mul(const std::vector<S>& x, const std::vector<S>& y) {
  std::vector<S> out(x.size() + y.size() - 1, S(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

template <ExactField S>
std::vector<S> poly_pow(const std::vector<S>& x, int e) {
  std::vector<S> out{S(1)};
  for (int i = 0; i < e; ++i) out = poly_mul(out, x);
  return out;
}

}  // namespace detail

template <ExactField S>
P1Automorphism<S>::P1Automorphism(S a_, S b_, S c_, S d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (is_zero(determinant())) throw DomainError("automorphism of P^1 needs ad - bc != 0");
}

template <ExactField S>
P1Automorphism<S> P1Automorphism<S>::operator*(const P1Automorphism& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

template <ExactField S>
P1Automorphism<S> P1Automorphism<S>::power(int k) const {
  if (k < 0) {
    const S det = determinant();
    return P1Automorphism(d / det, -b / det, -c / det, a / det).power(-k);
  }
  P1Automorphism out;
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

template <ExactField S>
Section<S>::Section(int level_, std::vector<S> coeffs_) : level(level_), coeffs(std::move(coeffs_)) {
  if (level < 0) throw DomainError("section level must be nonnegative");
  if (coeffs.size() > static_cast<std::size_t>(level) + 1) {
    for (std::size_t i = level + 1; i < coeffs.size(); ++i) {
      if (!ncproj::is_zero(coeffs[i])) throw DomainError("polynomial degree exceeds the section level");
    }
  }
  coeffs.resize(level + 1, S(0));
}

template <ExactField S>
Section<S> Section<S>::monomial(int level, int i, const S& c) {
  if (i < 0 || i > level) throw DomainError("monomial u^" + std::to_string(i) + " is not a section of level " +
                                            std::to_string(level));
  std::vector<S> v(level + 1, S(0));
  v[i] = c;
  return {level, std::move(v)};
}

template <ExactField S>
bool Section<S>::is_zero() const {
  for (const auto& c : coeffs) {
    if (!ncproj::is_zero(c)) return false;
  }
  return true;
}

template <ExactField S>
Section<S> section_twist(const Section<S>& g, const P1Automorphism<S>& sigma) {
  const int n = g.level;
  const std::vector<S> num{sigma.b, sigma.a};
  const std::vector<S> den{sigma.d, sigma.c};
  std::vector<S> out(n + 1, S(0));
  for (int i = 0; i <= n; ++i) {
    if (is_zero(g.coeffs[i])) continue;
    const auto term = detail::poly_mul(detail::poly_pow(num, i), detail::poly_pow(den, n - i));
    for (std::size_t e = 0; e < term.size(); ++e) out[e] += g.coeffs[i] * term[e];
  }
  return {n, std::move(out)};
}

template <ExactField S>
Section<S> thcr_multiply(const Section<S>& f, const Section<S>& g, const P1Automorphism<S>& sigma, int k) {
  if (k < 1 || f.level % k != 0) throw DomainError("section level is not a multiple of the line bundle degree");
  const Section<S> twisted = section_twist(g, sigma.power(f.level / k));
  return {f.level + g.level, detail::poly_mul(f.coeffs, twisted.coeffs)};
}

template <ExactField S>
Section<S> gamma_h_multiply(const Section<S>& a, const Section<S>& b, const P1Automorphism<S>& sigma, int k) {
  if (k < 1 || b.level % k != 0) throw DomainError("section level is not a multiple of the line bundle degree");
  const Section<S> twisted = section_twist(a, sigma.power(b.level / k));
  return {a.level + b.level, detail::poly_mul(twisted.coeffs, b.coeffs)};
}

template <ExactField S>
Section<S> thcr_evaluate(const Word& w, const P1Automorphism<S>& sigma, int k) {
  Section<S> acc(0, {S(1)});
  for (Letter l : w.letters()) acc = thcr_multiply(acc, Section<S>::monomial(k, l), sigma, k);
  return acc;
}

template <ExactField S>
AlgebraPresentation<S> thcr_presentation(const P1Automorphism<S>& sigma, int d_max, const FieldTag& field, int k) {
  if (d_max < 2) throw DomainError("d_max must be at least 2");
  if (k < 1) throw DomainError("line bundle degree must be positive");
  std::vector<std::string> symbols;
  if (k == 1) {
    symbols = {"x", "y"};
  } else {
    for (int i = 0; i <= k; ++i) symbols.push_back("x" + std::to_string(i));
  }
  AlgebraPresentation<S> p;
  p.name = "B";
  p.field = field;
  p.alphabet = Alphabet::unit(symbols);
  p.order = MonomialOrder::identity(symbols.size());
  const WordEvaluation<S> eval = [&](const Word& w) { return thcr_evaluate(w, sigma, k).coeffs; };
  p.relations = relations_from_evaluation(p.alphabet, p.order, d_max, eval);
  return p;
}

}  // namespace ncproj
