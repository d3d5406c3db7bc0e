#include "ncproj/core/errors.hpp"
#include "ncproj/real_mult/real_mult.hpp"

namespace ncproj {

SL2Matrix::SL2Matrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != Integer(1)) throw DomainError("matrix " + to_string() + " does not have determinant 1");
}

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

SL2Matrix SL2Matrix::power(long k) const {
  SL2Matrix base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  SL2Matrix out;
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

std::string SL2Matrix::to_string() const {
  return "[[" + a_.to_string() + "," + b_.to_string() + "],[" + c_.to_string() + "," + d_.to_string() + "]]";
}

QuadraticNumber mobius_act(const SL2Matrix& m, const QuadraticNumber& theta) {
  const Integer& D = theta.D();
  const QuadraticNumber den = QuadraticNumber(Rational(m.c()), D) * theta + QuadraticNumber(Rational(m.d()), D);
  if (den.is_zero()) throw DomainError("fractional linear map has a pole at " + theta.to_string());
  return (QuadraticNumber(Rational(m.a()), D) * theta + QuadraticNumber(Rational(m.b()), D)) / den;
}

Rational mobius_act(const SL2Matrix& m, const Rational& theta) {
  const Rational den = Rational(m.c()) * theta + Rational(m.d());
  if (den.is_zero()) throw DomainError("fractional linear map has a pole at " + theta.to_string());
  return (Rational(m.a()) * theta + Rational(m.b())) / den;
}

SL2Matrix word_matrix(const std::vector<GeneratorPower>& word) {
  SL2Matrix out;
  for (const auto& gp : word) {
    if (gp.generator != 'g' && gp.generator != 'h') throw DomainError(std::string("unknown generator ") + gp.generator);
    const SL2Matrix base = gp.generator == 'g' ? SL2Matrix::g() : SL2Matrix::h();
    out = out * base.power(gp.exponent.to_long());
  }
  return out;
}

std::string word_to_string(const std::vector<GeneratorPower>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& gp : word) {
    if (!out.empty()) out += " ";
    out += gp.generator;
    if (!gp.exponent.is_one()) out += "^" + gp.exponent.to_string();
  }
  return out;
}

QuadraticNumber minus_inverse(const QuadraticNumber& theta) {
  if (theta.is_zero()) throw DomainError("-1/theta at theta = 0");
  const QuadraticNumber out = mobius_act(SL2Matrix::h(), theta);
  const QuadraticNumber zero(theta.D());
  const QuadraticNumber one(Rational(1), theta.D());
  if (theta > zero && theta < one && !(out < -one)) throw Error("-1/theta left (-inf, -1) for theta in (0, 1)");
  return out;
}

Rational minus_inverse(const Rational& theta) {
  if (theta.is_zero()) throw DomainError("-1/theta at theta = 0");
  return mobius_act(SL2Matrix::h(), theta);
}

MoritaReduction morita_reduce(const QuadraticNumber& theta) {
  if (theta.is_rational()) throw DomainError("Morita reduction needs an irrational theta");
  const Integer f = floor(theta);
  MoritaReduction out{theta - QuadraticNumber(Rational(f), theta.D()), {}};
  if (!f.is_zero()) out.word.push_back({'g', -f});
  return out;
}

}  // namespace ncproj
