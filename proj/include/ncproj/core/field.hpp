#pragma once

#include <concepts>
#include <string>

#include <Eigen/Core>

#include "ncproj/core/rational.hpp"
#include "ncproj/core/rational_function.hpp"
#include "ncproj/core/scalar.hpp"
#include "ncproj/real_mult/quadratic.hpp"

namespace ncproj {

/// Exact field arithmetic required by the algebra templates.
template <class S>
concept ExactField = std::regular<S> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<S>;
  { to_string(a) } -> std::convertible_to<std::string>;
  S(0);
  S(1);
};

static_assert(ExactField<Rational>);
static_assert(ExactField<RationalFunction>);
static_assert(ExactField<Scalar>);

template <ExactField S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <ExactField S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

}  // namespace ncproj

namespace Eigen {

template <class S>
struct ExactNumTraits : GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Nested = S;
  using Literal = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline S epsilon() { return S(0); }
  static inline S dummy_precision() { return S(0); }
  static inline S highest() { return S(0); }
  static inline S lowest() { return S(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ncproj::Rational> : ExactNumTraits<ncproj::Rational> {};
template <>
struct NumTraits<ncproj::RationalFunction> : ExactNumTraits<ncproj::RationalFunction> {};
template <>
struct NumTraits<ncproj::Scalar> : ExactNumTraits<ncproj::Scalar> {};
template <>
struct NumTraits<ncproj::Integer> : ExactNumTraits<ncproj::Integer> {
  enum { IsInteger = 1 };
};

}  // namespace Eigen
