#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncproj/core/errors.hpp"
#include "ncproj/core/field.hpp"
#include "ncproj/core/word.hpp"

namespace ncproj {

inline bool looks_negative(const Rational& a) { return a.sign() < 0; }
inline bool looks_negative(const RationalFunction& a) { return a.looks_negative(); }
inline bool looks_negative(const Scalar& a) { return a.looks_negative(); }

/// Wraps a rendered coefficient in parentheses when it contains a top-level
/// sum, so that it can be followed by "*word".
std::string as_factor(const std::string& rendered);

/// Element of the free algebra: a finite map Word -> coefficient with no
/// stored zeros.
template <ExactField S>
class NcPolynomial {
 public:
  using Terms = std::map<Word, S>;

  NcPolynomial() = default;
  NcPolynomial(const S& c) {
    if (!ncproj::is_zero(c)) terms_.emplace(Word(), c);
  }
  NcPolynomial(const Word& w, const S& c = S(1)) {
    if (!ncproj::is_zero(c)) terms_.emplace(w, c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of w (zero when absent).
  S coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Highest term degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  bool is_homogeneous() const { return degree() == min_degree(); }

  NcPolynomial homogeneous_component(int d) const {
    NcPolynomial r;
    for (const auto& [w, c] : terms_) {
      if (w.degree() == d) r.terms_.emplace_hint(r.terms_.end(), w, c);
    }
    return r;
  }

  /// Homogeneous components in increasing degree; their sum is *this.
  std::vector<NcPolynomial> components() const {
    std::vector<NcPolynomial> out;
    for (const auto& [w, c] : terms_) {
      if (out.empty() || out.back().degree() != w.degree()) out.emplace_back();
      out.back().terms_.emplace_hint(out.back().terms_.end(), w, c);
    }
    return out;
  }

  /// Order-maximal term.
  std::pair<Word, S> lead(const MonomialOrder& order) const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it) {
      if (order.less(best->first, it->first)) best = it;
    }
    return *best;
  }

  /// Adds c*w in place.
  void add_term(const Word& w, const S& c) {
    if (ncproj::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (ncproj::is_zero(it->second)) terms_.erase(it);
    }
  }

  NcPolynomial operator-() const {
    NcPolynomial r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  NcPolynomial& operator+=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPolynomial& operator-=(const NcPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }

  /// Bilinear extension of word concatenation.
  friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
    NcPolynomial r;
    for (const auto& [u, cu] : a.terms_) {
      for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
    }
    return r;
  }

  NcPolynomial scaled(const S& c) const {
    if (ncproj::is_zero(c)) return {};
    NcPolynomial r = *this;
    for (auto& [w, x] : r.terms_) x *= c;
    return r;
  }

  /// left * this * right for words.
  NcPolynomial sandwich(const Word& left, const Word& right) const {
    NcPolynomial r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(left * w * right, c);
    return r;
  }

  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) { return a.terms_ == b.terms_; }

  /// Canonical rendering: terms sorted descending by the order, e.g. "y*x - q*x*y".
  std::string to_string(const Alphabet& alphabet, const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Word, S>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return order.less(b->first, a->first); });
    std::string out;
    for (const auto* t : sorted) {
      const bool negative = looks_negative(t->second);
      const S mag = negative ? -t->second : t->second;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (t->first.empty()) {
        out += as_factor(ncproj::to_string(mag));
      } else if (mag == S(1)) {
        out += t->first.to_string(alphabet);
      } else {
        out += as_factor(ncproj::to_string(mag)) + "*" + t->first.to_string(alphabet);
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace ncproj
