#include <ostream>

#include "ncproj/core/errors.hpp"
#include "ncproj/heart/heart.hpp"

namespace ncproj {

Charge::Charge(Integer r, Integer d) : rank(std::move(r)), deg(std::move(d)) {
  if (rank.sign() < 0) throw DomainError("charge " + to_string() + " has negative rank");
  if (rank.is_zero() && deg.sign() <= 0) throw DomainError("torsion charge " + to_string() + " needs positive length");
}

std::string Charge::to_string() const { return rank.to_string() + ":" + deg.to_string(); }

std::strong_ordering operator<=>(const Charge& a, const Charge& b) {
  if (auto c = a.rank <=> b.rank; c != 0) return c;
  return a.deg <=> b.deg;
}

std::string Slope::to_string() const { return infinite ? "inf" : value.to_string(); }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
  return a.value <=> b.value;
}

std::string to_string(const Theta& theta) {
  return std::visit([](const auto& t) { return t.to_string(); }, theta);
}

int compare(const Slope& mu, const Theta& theta) {
  if (mu.infinite) return 1;
  if (const auto* r = std::get_if<Rational>(&theta)) return (mu.value - *r).sign();
  return -compare(std::get<QuadraticNumber>(theta), mu.value);
}

Slope slope(const Charge& z) {
  if (z.rank.is_zero()) return Slope::infinity();
  return Slope::finite(Rational(z.deg, z.rank));
}

Integer euler_pairing(const Charge& a, const Charge& b) { return a.rank * b.deg - a.deg * b.rank; }

bool stable_p(const Charge& z) {
  if (z.rank.is_zero()) return z.deg.is_one();
  return gcd(z.rank, z.deg).is_one();
}

HomDims hom_dim_stable(const Charge& a, const Charge& b) {
  if (!stable_p(a) || !stable_p(b)) {
    throw DomainError("hom_dim_stable needs stable charges, got " + a.to_string() + " and " + b.to_string());
  }
  if (a == b) return {Integer(1), Integer(1)};
  const Integer chi = euler_pairing(a, b);
  const auto c = slope(a) <=> slope(b);
  if (c < 0) return {chi, Integer(0)};
  if (c > 0) return {Integer(0), -chi};
  return {Integer(0), Integer(0)};
}

}  // namespace ncproj
