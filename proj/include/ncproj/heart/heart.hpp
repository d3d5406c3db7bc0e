#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "ncproj/core/rational.hpp"
#include "ncproj/real_mult/quadratic.hpp"

namespace ncproj {

/// Numerical class (rank, degree) of a coherent sheaf on an elliptic curve.
struct Charge {
  Integer rank;
  Integer deg;

  Charge() : rank(1), deg(0) {}
  /// Throws DomainError for (0, 0), negative rank, or torsion of nonpositive length.
  Charge(Integer rank, Integer deg);

  /// "r:d".
  std::string to_string() const;
  friend bool operator==(const Charge&, const Charge&) = default;
  friend std::strong_ordering operator<=>(const Charge& a, const Charge& b);
};

/// deg/rank, or +infinity for torsion.
struct Slope {
  bool infinite = false;
  Rational value;

  static Slope finite(const Rational& v) { return {false, v}; }
  static Slope infinity() { return {true, Rational(0)}; }
  std::string to_string() const;
  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);
};

/// Real parameter of the heart: rational or a quadratic irrationality.
using Theta = std::variant<Rational, QuadraticNumber>;
std::string to_string(const Theta& theta);
/// Sign of (slope - theta); infinite slopes exceed every theta.
int compare(const Slope& mu, const Theta& theta);

struct Factor {
  Charge charge;
  int multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Direct sum of semistable classes, kept merged and sorted by charge.
/// The empty class models the zero object.
class SheafClass {
 public:
  SheafClass() = default;
  SheafClass(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  Charge total() const;
  /// "[1:0, 2:1*3]".
  std::string to_string() const;
  friend bool operator==(const SheafClass&, const SheafClass&) = default;

 private:
  std::vector<Factor> factors_;
};

struct HNLayer {
  Slope slope;
  SheafClass factors;
  friend bool operator==(const HNLayer&, const HNLayer&) = default;
};

struct HNFiltration {
  std::vector<HNLayer> layers;  // strictly increasing slopes
  Slope mu_min() const { return layers.front().slope; }
  Slope mu_max() const { return layers.back().slope; }
};

/// Two-term object of the heart: shifted ~ H^-1 with slopes <= theta,
/// plain ~ H^0 with slopes > theta.
struct HeartObject {
  SheafClass shifted;
  SheafClass plain;
  Theta theta;
};

Slope slope(const Charge& z);
/// Throws DomainError on the zero class.
HNFiltration hn(const SheafClass& F);

struct TorsionSplit {
  SheafClass t;  // slopes > theta
  SheafClass q;  // slopes <= theta
};
TorsionSplit torsion_split(const SheafClass& F, const Theta& theta);

bool in_heart(const HeartObject& K);

enum class HomVanishing { certain_zero, unknown };
std::string to_string(HomVanishing v);
/// certain_zero iff mu_min(F) > mu_max(G), or either class is zero.
HomVanishing hom_vanishes(const SheafClass& F, const SheafClass& G);

/// rank1 * deg2 - deg1 * rank2.
Integer euler_pairing(const Charge& a, const Charge& b);
bool stable_p(const Charge& z);

struct HomDims {
  Integer hom;
  Integer ext1;
  friend bool operator==(const HomDims&, const HomDims&) = default;
};
/// dim Hom and dim Ext^1 between stable objects of the given charges.
HomDims hom_dim_stable(const Charge& a, const Charge& b);

}  // namespace ncproj
