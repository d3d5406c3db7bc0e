#include "ncproj/core/scalar.hpp"

#include <ostream>

#include "ncproj/core/errors.hpp"

namespace ncproj {

std::string FieldTag::to_string() const {
  switch (kind) {
    case FieldKind::rationals: return "Q";
    case FieldKind::rational_functions: return "Q(q)";
    case FieldKind::quadratic: return "Q(sqrt(" + D.to_string() + "))";
  }
  return "?";
}

FieldTag join(const FieldTag& a, const FieldTag& b) {
  if (a.kind == FieldKind::rationals) return b;
  if (b.kind == FieldKind::rationals) return a;
  if (a == b) return a;
  throw FieldMismatch(a.to_string() + " vs " + b.to_string());
}

namespace {

struct Promote {
  // Brings two values to a common alternative and applies f.
  template <class F>
  static Scalar apply(const Scalar::Value& a, const Scalar::Value& b, F&& f) {
    return std::visit(
        [&](const auto& x, const auto& y) -> Scalar {
          using X = std::decay_t<decltype(x)>;
          using Y = std::decay_t<decltype(y)>;
          if constexpr (std::is_same_v<X, Y>) {
            return Scalar(f(x, y));
          } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, RationalFunction>) {
            return Scalar(f(RationalFunction(x), y));
          } else if constexpr (std::is_same_v<X, RationalFunction> && std::is_same_v<Y, Rational>) {
            return Scalar(f(x, RationalFunction(y)));
          } else if constexpr (std::is_same_v<X, Rational> && std::is_same_v<Y, QuadraticNumber>) {
            return Scalar(f(QuadraticNumber(x, y.D()), y));
          } else if constexpr (std::is_same_v<X, QuadraticNumber> && std::is_same_v<Y, Rational>) {
            return Scalar(f(x, QuadraticNumber(y, x.D())));
          } else {
            throw FieldMismatch("Q(q) and a quadratic field cannot be mixed");
          }
        },
        a, b);
  }
};

}  // namespace

std::optional<Rational> Scalar::as_rational() const {
  return std::visit(
      [](const auto& x) -> std::optional<Rational> {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>) {
          return x;
        } else if constexpr (std::is_same_v<X, RationalFunction>) {
          if (x.is_constant()) return x.constant();
          return std::nullopt;
        } else {
          if (x.is_rational()) return x.rational();
          return std::nullopt;
        }
      },
      v_);
}

FieldTag Scalar::field() const {
  return std::visit(
      [](const auto& x) -> FieldTag {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>) {
          return FieldTag::rationals();
        } else if constexpr (std::is_same_v<X, RationalFunction>) {
          return FieldTag::rational_functions();
        } else {
          return FieldTag::quadratic(x.D());
        }
      },
      v_);
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

bool Scalar::looks_negative() const {
  return std::visit(
      [](const auto& x) -> bool {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>) {
          return x.sign() < 0;
        } else if constexpr (std::is_same_v<X, RationalFunction>) {
          return x.looks_negative();
        } else {
          return x.to_string().starts_with("-");
        }
      },
      v_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  *this = Promote::apply(v_, o.v_, [](const auto& x, const auto& y) { return x + y; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  *this = Promote::apply(v_, o.v_, [](const auto& x, const auto& y) { return x - y; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = Promote::apply(v_, o.v_, [](const auto& x, const auto& y) { return x * y; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  *this = Promote::apply(v_, o.v_, [](const auto& x, const auto& y) { return x / y; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() == b.v_.index()) return a.v_ == b.v_;
  const auto ra = a.as_rational();
  const auto rb = b.as_rational();
  if (a.is_rational() || b.is_rational()) return ra && rb && *ra == *rb;
  throw FieldMismatch("comparison across Q(q) and a quadratic field");
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.to_string(); }

Scalar inverse(const Scalar& a) { return Scalar(1) / a; }

Scalar embed(const Scalar& a, const FieldTag& field) {
  const auto r = a.as_rational();
  if (!a.is_rational() || !r) return a;
  switch (field.kind) {
    case FieldKind::rationals: return a;
    case FieldKind::rational_functions: return Scalar(RationalFunction(*r));
    case FieldKind::quadratic: return Scalar(QuadraticNumber(*r, field.D));
  }
  return a;
}

}  // namespace ncproj
