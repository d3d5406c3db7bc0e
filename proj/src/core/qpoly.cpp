#include "ncproj/core/qpoly.hpp"

#include "ncproj/core/errors.hpp"

namespace ncproj {

QPoly::QPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int QPoly::term_count() const {
  int n = 0;
  for (const auto& c : c_) n += c.is_zero() ? 0 : 1;
  return n;
}

const Rational& QPoly::coeff(int k) const {
  static const Rational zero;
  return (k < 0 || k > degree()) ? zero : c_[k];
}

Rational QPoly::eval(const Rational& x) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  QPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = var + (k > 1 ? "^" + std::to_string(k) : "");
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  QPoly rem = a;
  std::vector<Rational> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / lead;
    quot[shift] = factor;
    rem -= QPoly::monomial(factor, shift) * b;
  }
  return {QPoly(std::move(quot)), rem};
}

QPoly monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(inverse(a.leading()));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

QPoly pow(const QPoly& a, int exponent) {
  QPoly r(Rational(1));
  for (int i = 0; i < exponent; ++i) r = r * a;
  return r;
}

}  // namespace ncproj
