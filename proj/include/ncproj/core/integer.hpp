#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncproj {

/// Arbitrary precision integer. Thin value wrapper over mpz_class that keeps
/// gmpxx expression templates out of generic code.
class Integer {
 public:
  Integer() = default;
  template <std::signed_integral T>
  Integer(T v) : v_(static_cast<long>(v)) {}
  template <std::unsigned_integral T>
  Integer(T v) : v_(static_cast<unsigned long>(v)) {}
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal literal; throws Error on bad input.
  static Integer parse(std::string_view text);

  const mpz_class& mpz() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  double to_double() const { return v_.get_d(); }
  /// Natural log, valid for positive values of any size.
  long double log() const;
  std::string to_string() const { return v_.get_str(); }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  /// Truncating quotient; use floor_div for floor semantics.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

 private:
  mpz_class v_;
};

Integer abs(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);
Integer floor_div(const Integer& a, const Integer& b);
/// Largest r with r*r <= n; n must be nonnegative.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
/// Writes n = f^2 * core with core squarefree; n > 0.
void squarefree_decompose(const Integer& n, Integer& f, Integer& core);

}  // namespace ncproj

template <>
struct std::hash<ncproj::Integer> {
  std::size_t operator()(const ncproj::Integer& a) const noexcept {
    return std::hash<std::string>{}(a.to_string());
  }
};
