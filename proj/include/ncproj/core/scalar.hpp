#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "ncproj/core/rational.hpp"
#include "ncproj/core/rational_function.hpp"
#include "ncproj/real_mult/quadratic.hpp"

namespace ncproj {

enum class FieldKind { rationals, rational_functions, quadratic };

/// Identifies one of the supported coefficient fields: Q, Q(q) or Q(sqrt(D)).
struct FieldTag {
  FieldKind kind = FieldKind::rationals;
  Integer D;  // only meaningful for quadratic fields

  static FieldTag rationals() { return {}; }
  static FieldTag rational_functions() { return {FieldKind::rational_functions, Integer(0)}; }
  static FieldTag quadratic(const Integer& D) { return {FieldKind::quadratic, D}; }

  /// "Q", "Q(q)" or "Q(sqrt(D))".
  std::string to_string() const;
  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

/// Coefficient of the runtime-typed front end: a value in exactly one of the
/// supported fields.
///
/// Rationals embed in every field, so a Rational operand is promoted when it
/// meets a Q(q) or Q(sqrt(D)) operand. Any other combination throws
/// FieldMismatch.
class Scalar {
 public:
  using Value = std::variant<Rational, RationalFunction, QuadraticNumber>;

  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : v_(Rational(v)) {}
  Scalar(const Rational& v) : v_(v) {}
  Scalar(const Integer& v) : v_(Rational(v)) {}
  Scalar(const RationalFunction& v) : v_(v) {}
  Scalar(const QuadraticNumber& v) : v_(v) {}

  const Value& value() const { return v_; }
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  /// The rational value, also for constant rational functions and rational
  /// quadratic elements; nullopt otherwise.
  std::optional<Rational> as_rational() const;
  /// Smallest supported field containing the value.
  FieldTag field() const;

  bool is_zero() const;
  bool is_one() const;
  /// Whether the canonical rendering starts with a minus sign.
  bool looks_negative() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& a);

 private:
  Value v_;
};

inline bool is_zero(const Scalar& a) { return a.is_zero(); }
Scalar inverse(const Scalar& a);
inline std::string to_string(const Scalar& a) { return a.to_string(); }

/// Promotes a rational-valued scalar into the given field (identity otherwise).
Scalar embed(const Scalar& a, const FieldTag& field);
/// The unique field of a computation mixing a and b; throws FieldMismatch.
FieldTag join(const FieldTag& a, const FieldTag& b);

}  // namespace ncproj
