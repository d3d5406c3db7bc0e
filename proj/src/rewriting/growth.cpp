#include <cmath>

#include "ncproj/rewriting/rewrite_system.hpp"

namespace ncproj {

GrowthReport growth_report(const std::vector<Integer>& dims) {
  GrowthReport r;
  r.dims = dims;
  Integer running(0);
  for (const auto& d : dims) {
    running += d;
    r.filtration_dims.push_back(running);
  }
  const int N = static_cast<int>(dims.size()) - 1;
  r.cutoff = N;
  r.window_lo = N / 2;
  r.window_hi = N;

  bool exponential = r.window_lo < r.window_hi;
  for (int d = r.window_lo; d < r.window_hi && exponential; ++d) {
    const Integer& a = dims[d];
    const Integer& b = dims[d + 1];
    if (b.is_zero() || Integer(2) * b < Integer(3) * a) exponential = false;
  }
  if (exponential) {
    r.infinite = true;
    return r;
  }

  std::vector<long double> xs, ys;
  for (int n = std::max(r.window_lo, 1); n <= r.window_hi; ++n) {
    if (r.filtration_dims[n].sign() <= 0) continue;
    xs.push_back(std::log(static_cast<long double>(n)));
    ys.push_back(r.filtration_dims[n].log());
  }
  if (xs.size() < 2) return r;
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  long double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  r.estimate_value = sxy / sxx;
  r.estimate = Rational::approximate(r.estimate_value, 1000000);
  r.low_confidence = r.estimate_value > 1.15L && r.estimate_value < 1.85L;
  return r;
}

}  // namespace ncproj
