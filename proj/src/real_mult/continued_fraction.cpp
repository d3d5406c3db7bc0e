#include <array>
#include <map>

#include "ncproj/core/errors.hpp"
#include "ncproj/real_mult/real_mult.hpp"

namespace ncproj {

namespace {

// Integer 2x2 matrix with determinant +-1.
using Mat = std::array<Integer, 4>;

Mat mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Mat quotient_product(const std::vector<Integer>& terms) {
  Mat m{Integer(1), Integer(0), Integer(0), Integer(1)};
  for (const auto& a : terms) m = mul(m, Mat{a, Integer(1), Integer(1), Integer(0)});
  return m;
}

Integer det(const Mat& m) { return m[0] * m[3] - m[1] * m[2]; }

}  // namespace

CFExpansion cf_expand(const QuadraticNumber& theta, int max_terms) {
  if (theta.is_rational()) throw DomainError("continued fraction of a rational number is not periodic");
  CFExpansion out;
  std::map<QuadraticNumber, int> seen;
  std::vector<Integer> terms;
  QuadraticNumber x = theta;
  for (int k = 0; k < max_terms; ++k) {
    if (auto it = seen.find(x); it != seen.end()) {
      out.preperiod.assign(terms.begin(), terms.begin() + it->second);
      out.period.assign(terms.begin() + it->second, terms.end());
      out.window = k;
      return out;
    }
    seen.emplace(x, k);
    const Integer a = floor(x);
    terms.push_back(a);
    x = inverse(x - QuadraticNumber(Rational(a), theta.D()));
  }
  out.preperiod = terms;
  out.window = max_terms;
  return out;
}

QuadraticNumber cf_value(const CFExpansion& cf, const Integer& D) {
  if (!cf.periodic()) throw DomainError("continued fraction has no detected period");
  const Mat P = quotient_product(cf.period);
  // y = (P0 y + P1)/(P2 y + P3), larger root
  const Integer disc = (P[3] - P[0]) * (P[3] - P[0]) + Integer(4) * P[2] * P[1];
  if (!(disc % D).is_zero() || !is_square(disc / D)) {
    throw DomainError("periodic continued fraction does not lie in Q(sqrt(" + D.to_string() + "))");
  }
  const QuadraticNumber root(Integer(0), isqrt(disc / D), D, Integer(1));
  const QuadraticNumber y =
      (QuadraticNumber(Rational(P[0] - P[3]), D) + root) / QuadraticNumber(Rational(Integer(2) * P[2]), D);
  const Mat Q = quotient_product(cf.preperiod);
  return (QuadraticNumber(Rational(Q[0]), D) * y + QuadraticNumber(Rational(Q[1]), D)) /
         (QuadraticNumber(Rational(Q[2]), D) * y + QuadraticNumber(Rational(Q[3]), D));
}

SL2Matrix fixing_matrix(const QuadraticNumber& theta) {
  const CFExpansion cf = cf_expand(theta);
  if (!cf.periodic()) throw DomainError("no period found for " + theta.to_string());
  Mat per = quotient_product(cf.period);
  if (det(per).sign() < 0) per = mul(per, per);
  const Mat pre = quotient_product(cf.preperiod);
  const Integer e = det(pre);
  const Mat pre_inv{pre[3] * e, -pre[1] * e, -pre[2] * e, pre[0] * e};
  Mat m = mul(mul(pre, per), pre_inv);
  if ((m[0] + m[3]).sign() < 0) m = mul(m, m);
  SL2Matrix g(m[0], m[1], m[2], m[3]);
  if (mobius_act(g, theta) != theta || g.trace() <= Integer(2)) {
    throw Error("fixing matrix " + g.to_string() + " fails its postcondition");
  }
  return g;
}

}  // namespace ncproj
