#include "ncproj/core/errors.hpp"
#include "ncproj/real_mult/real_mult.hpp"

namespace ncproj {

RmAlgebraReport rm_hilbert(const SL2Matrix& F, const Charge& G, const QuadraticNumber& theta, int n_max,
                           std::string theta_label) {
  if (n_max < 1) throw DomainError("n_max must be positive");
  if (theta.is_rational()) throw DomainError("theta must be irrational");
  if (!stable_p(G)) throw DomainError("G = " + G.to_string() + " is not a stable charge");
  if (mobius_act(F, theta) != theta) throw DomainError(F.to_string() + " does not fix " + theta.to_string());
  if (F.trace() <= Integer(2)) throw DomainError(F.to_string() + " is not hyperbolic with positive eigenvalues");

  RmAlgebraReport rep{F, G, theta, std::move(theta_label), {}, {}, {}, false};
  Integer deg = G.deg, rank = G.rank;
  const Theta th = theta;
  for (int n = 1; n <= n_max; ++n) {
    Integer next_deg = F.a() * deg + F.b() * rank;
    Integer next_rank = F.c() * deg + F.d() * rank;
    deg = std::move(next_deg);
    rank = std::move(next_rank);
    if (rank.sign() < 0 || (rank.is_zero() && deg.sign() <= 0)) {
      throw DomainError("orbit leaves the charges of sheaves at n = " + std::to_string(n));
    }
    const Charge z(rank, deg);
    if (!stable_p(z)) throw DomainError("orbit charge " + z.to_string() + " is not stable");
    const Slope mu = slope(z);
    if (!rep.slopes.empty()) {
      const int side = compare(rep.slopes.front(), th);
      const bool toward = side < 0 ? rep.slopes.back() < mu : mu < rep.slopes.back();
      if (compare(mu, th) != side || side == 0 || !toward) {
        throw DomainError("orbit slopes are not strictly monotone on one side of theta at n = " + std::to_string(n));
      }
    }
    if (!(slope(G) < mu)) {
      throw DomainError("Hom(G, F^n G) does not concentrate in degree 0 at n = " + std::to_string(n));
    }
    rep.charges.push_back(z);
    rep.slopes.push_back(mu);
    rep.dims.push_back(hom_dim_stable(G, z).hom);
  }
  rep.recurrence_checked = true;
  for (std::size_t i = 2; i < rep.dims.size(); ++i) {
    if (rep.dims[i] != F.trace() * rep.dims[i - 1] - rep.dims[i - 2]) rep.recurrence_checked = false;
  }
  return rep;
}

}  // namespace ncproj
