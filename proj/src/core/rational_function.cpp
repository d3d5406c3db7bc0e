#include "ncproj/core/rational_function.hpp"

#include <ostream>

#include "ncproj/core/errors.hpp"

namespace ncproj {

RationalFunction::RationalFunction(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const QPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational s = inverse(lead);
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero();
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

namespace {
std::string factor_string(const QPoly& p) {
  const std::string s = p.to_string("q");
  if (p.term_count() > 1) return "(" + s + ")";
  return s;
}
}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string("q");
  std::string numerator = num_.term_count() > 1 ? "(" + num_.to_string("q") + ")" : num_.to_string("q");
  return numerator + "/" + factor_string(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& a) { return os << a.to_string(); }

RationalFunction inverse(const RationalFunction& a) { return RationalFunction(Rational(1)) / a; }

}  // namespace ncproj
