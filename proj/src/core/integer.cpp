#include "ncproj/core/integer.hpp"

#include <cmath>
#include <ostream>

#include "ncproj/core/errors.hpp"

namespace ncproj {

Integer Integer::parse(std::string_view text) {
  mpz_class v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0) {
    throw Error("invalid integer literal '" + std::string(text) + "'");
  }
  return Integer(std::move(v));
}

long Integer::to_long() const {
  if (!fits_long()) throw Error("integer does not fit in a machine word: " + to_string());
  return v_.get_si();
}

long double Integer::log() const {
  if (sign() <= 0) throw DomainError("log of a nonpositive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v_.get_mpz_t());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp) * std::log(2.0L);
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero();
  return Integer(mpz_class(a.v_ / b.v_));
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero();
  return Integer(mpz_class(a.v_ % b.v_));
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.mpz()))); }

Integer gcd(const Integer& a, const Integer& b) { return Integer(mpz_class(::gcd(a.mpz(), b.mpz()))); }

Integer lcm(const Integer& a, const Integer& b) { return Integer(mpz_class(::lcm(a.mpz(), b.mpz()))); }

Integer pow(const Integer& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Integer(std::move(r));
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero();
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(r));
}

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw DomainError("isqrt of a negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.mpz().get_mpz_t());
  return Integer(std::move(r));
}

bool is_square(const Integer& n) {
  return n.sign() >= 0 && mpz_perfect_square_p(n.mpz().get_mpz_t()) != 0;
}

void squarefree_decompose(const Integer& n, Integer& f, Integer& core) {
  if (n.sign() <= 0) throw DomainError("squarefree decomposition needs a positive integer");
  mpz_class rest = n.mpz();
  mpz_class factor = 1;
  mpz_class result_core = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      factor *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      result_core *= p;
    }
  }
  result_core *= rest;
  f = Integer(factor);
  core = Integer(result_core);
}

}  // namespace ncproj
