#include "ncproj/coord_rings/coord_rings.hpp"
#include "ncproj/core/errors.hpp"

namespace ncproj {

void TwoPointTriple::validate() const {
  if (r1 < 0 || r2 < 0 || r1 + r2 < 1) {
    throw DomainError("two-point triple needs r1, r2 >= 0 and r1 + r2 >= 1");
  }
}

std::vector<long> two_point_hilbert(const TwoPointTriple& t, int n_max) {
  t.validate();
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  std::vector<long> dims;
  // s^n V has multiplicities (r1, r2) or (r2, r1); Hom splits over the two points.
  for (int n = 0; n <= n_max; ++n) {
    const long m1 = n % 2 == 0 ? t.r1 : t.r2;
    const long m2 = n % 2 == 0 ? t.r2 : t.r1;
    dims.push_back(static_cast<long>(t.r1) * m1 + static_cast<long>(t.r2) * m2);
  }
  return dims;
}

}  // namespace ncproj
