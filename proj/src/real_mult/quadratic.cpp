#include "ncproj/real_mult/quadratic.hpp"

#include <cmath>
#include <ostream>

#include "ncproj/core/errors.hpp"

namespace ncproj {

namespace {
Integer checked_field(const Integer& D) {
  if (D <= Integer(1)) throw DomainError("quadratic field needs D > 1, got " + D.to_string());
  Integer f, core;
  squarefree_decompose(D, f, core);
  if (core.is_one()) throw DomainError("D = " + D.to_string() + " is a perfect square");
  if (!f.is_one()) throw DomainError("D = " + D.to_string() + " is not squarefree");
  return D;
}
}  // namespace

QuadraticNumber::QuadraticNumber(const Integer& D) : p_(0), s_(0), q_(1), D_(checked_field(D)) {}

QuadraticNumber::QuadraticNumber(const Integer& p, const Integer& s, const Integer& D, const Integer& q)
    : p_(p), s_(s), q_(q) {
  if (q.is_zero()) throw DivisionByZero();
  if (D <= Integer(1)) throw DomainError("quadratic field needs D > 1, got " + D.to_string());
  Integer f, core;
  squarefree_decompose(D, f, core);
  if (core.is_one()) throw DomainError("D = " + D.to_string() + " is a perfect square");
  D_ = core;
  s_ = s_ * f;
  normalize();
}

QuadraticNumber::QuadraticNumber(const Rational& r, const Integer& D)
    : p_(r.num()), s_(0), q_(r.den()), D_(checked_field(D)) {}

void QuadraticNumber::normalize() {
  if (q_.sign() < 0) {
    p_ = -p_;
    s_ = -s_;
    q_ = -q_;
  }
  Integer g = gcd(gcd(p_, s_), q_);
  if (!g.is_zero() && !g.is_one()) {
    p_ = p_ / g;
    s_ = s_ / g;
    q_ = q_ / g;
  }
  if (p_.is_zero() && s_.is_zero()) q_ = Integer(1);
}

void QuadraticNumber::require_same_field(const QuadraticNumber& o) const {
  if (D_ != o.D_) {
    throw FieldMismatch("Q(sqrt(" + D_.to_string() + ")) vs Q(sqrt(" + o.D_.to_string() + "))");
  }
}

int QuadraticNumber::sign() const {
  // sign of p + s*sqrt(D), q > 0
  const int sp = p_.sign();
  const int ss = s_.sign();
  if (ss == 0) return sp;
  if (sp == 0 || sp == ss) return ss;
  // opposite signs: compare p^2 with s^2 D
  const Integer lhs = p_ * p_;
  const Integer rhs = s_ * s_ * D_;
  if (lhs > rhs) return sp;
  return ss;  // equality impossible for nonsquare D
}

long double QuadraticNumber::approx() const {
  return (static_cast<long double>(p_.to_double()) +
          static_cast<long double>(s_.to_double()) * std::sqrt(static_cast<long double>(D_.to_double()))) /
         static_cast<long double>(q_.to_double());
}

void QuadraticNumber::minimal_polynomial(Integer& a, Integer& b, Integer& c) const {
  if (s_.is_zero()) throw DomainError("minimal quadratic of a rational number");
  // x = (p + s r)/q  =>  (q x - p)^2 = s^2 D
  a = q_ * q_;
  b = Integer(-2) * p_ * q_;
  c = p_ * p_ - s_ * s_ * D_;
  Integer g = gcd(gcd(a, b), c);
  a = a / g;
  b = b / g;
  c = c / g;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  require_same_field(o);
  p_ = p_ * o.q_ + o.p_ * q_;
  s_ = s_ * o.q_ + o.s_ * q_;
  q_ = q_ * o.q_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  require_same_field(o);
  const Integer np = p_ * o.p_ + s_ * o.s_ * D_;
  const Integer ns = p_ * o.s_ + s_ * o.p_;
  p_ = np;
  s_ = ns;
  q_ = q_ * o.q_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  require_same_field(o);
  return *this *= inverse(o);
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  const int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadraticNumber::to_string() const {
  if (s_.is_zero()) return Rational(p_, q_).to_string();
  std::string root = "sqrt(" + D_.to_string() + ")";
  const Integer mag = abs(s_);
  std::string surd = mag.is_one() ? root : mag.to_string() + "*" + root;
  std::string numerator;
  bool compound = false;
  if (p_.is_zero()) {
    numerator = (s_.sign() < 0 ? "-" : "") + surd;
  } else {
    numerator = p_.to_string() + (s_.sign() < 0 ? " - " : " + ") + surd;
    compound = true;
  }
  if (q_.is_one()) return numerator;
  return (compound ? "(" + numerator + ")" : numerator) + "/" + q_.to_string();
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& a) { return os << a.to_string(); }

QuadraticNumber inverse(const QuadraticNumber& a) {
  if (a.is_zero()) throw DivisionByZero();
  // q/(p + s r) = q (p - s r)/(p^2 - s^2 D)
  const Integer norm = a.p() * a.p() - a.s() * a.s() * a.D();
  return {a.q() * a.p(), -a.q() * a.s(), a.D(), norm};
}

Integer floor(const QuadraticNumber& a) {
  if (a.s().is_zero()) return floor_div(a.p(), a.q());
  // floor((p + s sqrt(D))/q) with q > 0: write s sqrt(D) = sign(s) sqrt(s^2 D)
  const Integer n = a.s() * a.s() * a.D();
  const Integer r = isqrt(n);  // r < sqrt(n) < r + 1 since n is not a square
  if (a.s().sign() > 0) return floor_div(a.p() + r, a.q());
  // p - sqrt(n) lies strictly between p - r - 1 and p - r
  return floor_div(a.p() - r - Integer(1), a.q());
}

int compare(const QuadraticNumber& x, const Rational& r) {
  return (x - QuadraticNumber(r, x.D())).sign();
}

}  // namespace ncproj
