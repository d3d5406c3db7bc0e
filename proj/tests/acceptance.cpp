// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ncproj/cli/cli.hpp"
#include "ncproj/coord_rings/coord_rings.hpp"
#include "ncproj/homology/homology.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace ncproj;
using json = nlohmann::json;
using P = AlgebraPresentation<Scalar>;
using Clock = std::chrono::steady_clock;

namespace {

const char* const k1 = "algebra K1 over Q { gens: x; rels: ; }";
const char* const plane = "algebra Plane over Q { gens: x, y; rels: y*x - x*y; }";
const char* const quantum_plane = "algebra QP over Q(q) { gens: x, y; rels: y*x - q*x*y; }";
const char* const commutative3 = "algebra C3 over Q { gens: x, y, z; rels: y*z - z*y, z*x - x*z, x*y - y*x; }";

/// Collects failed checks of one criterion.
struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Runs body and checks it finishes within limit seconds.
void timed(Checks& c, const std::string& label, double limit, const std::function<void()>& body) {
  const auto t0 = Clock::now();
  body();
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << label << " took " << std::fixed << std::setprecision(3) << s << "s (limit " << limit << "s)";
  c.expect(s < limit, os.str());
}

Word w(std::initializer_list<Letter> l) { return Word(std::vector<Letter>(l)); }

std::vector<Integer> n_plus_one(int N) {
  std::vector<Integer> out;
  for (int n = 0; n <= N; ++n) out.emplace_back(n + 1);
  return out;
}

void thcr_example(Checks& c) {
  std::ostringstream out, err;
  const int code = cli::run({"thcr", "present", "--sigma", "q,0,0,1", "--dmax", "8"}, out, err);
  c.expect(code == 0, "thcr present exited with " + std::to_string(code) + ": " + err.str());
  if (code) return;
  const json r = json::parse(out.str());
  const P B = cli::parse_presentation(r["presentation"].get<std::string>());
  c.expect(B.relations.size() == 1, "expected exactly one relation");
  if (B.relations.size() != 1) return;
  const auto& f = B.relations[0];
  const Scalar q = cli::parse_scalar("q", FieldTag::rational_functions());
  c.expect(f.degree() == 2 && f.is_homogeneous(), "relation is not of degree 2");
  c.expect(f.size() == 2 && f.coeff(w({1, 0})) == -q * f.coeff(w({0, 1})), "relation does not span x*y - q*y*x");
  std::vector<long> expect;
  for (int n = 0; n <= 8; ++n) expect.push_back(n + 1);
  c.expect(r["hilbert"] == json(expect), "dim B_n != n + 1: " + r["hilbert"].dump());
}

void two_point(Checks& c) {
  for (const auto [r1, r2] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 1}}) {
    const auto dims = two_point_hilbert({r1, r2}, 10);
    for (int n = 0; n <= 10; ++n) {
      const long expect = n % 2 == 0 ? long(r1) * r1 + long(r2) * r2 : 2L * r1 * r2;
      c.expect(dims.at(n) == expect, "(" + std::to_string(r1) + "," + std::to_string(r2) + ") n=" +
                                         std::to_string(n) + ": " + std::to_string(dims.at(n)));
    }
  }
  // k[y] with y in degree 2
  const P ky = cli::parse_presentation("algebra Ky over Q { gens: y:2; rels: ; }");
  const auto h = build(ky, 10).hilbert_function(10);
  const auto dims = two_point_hilbert({1, 0}, 10);
  for (int n = 0; n <= 10; ++n) c.expect(h[n] == Integer(dims[n]), "(1,0) differs from k[y] at " + std::to_string(n));
}

void twist_equivalence(Checks& c) {
  const P p = cli::parse_presentation("algebra Plane over Q(q) { gens: x, y; rels: y*x - x*y; }");
  const Scalar q = cli::parse_scalar("q", p.field);
  const auto sigma = GradedEndomorphism<Scalar>::diagonal({q, Scalar(1)});
  c.expect(check_automorphism(p, sigma, 10), "diag(q,1) not recognised as an automorphism");
  const P t = twist(p, sigma, 10);
  c.expect(t.relations.size() == 1, "twisted presentation has " + std::to_string(t.relations.size()) + " relations");
  if (t.relations.size() == 1) {
    const auto& f = t.relations[0];
    c.expect(f.size() == 2 && f.coeff(w({0, 1})) == -q * f.coeff(w({1, 0})), "relation span is not yx - q xy");
  }
  c.expect(build(t, 10).hilbert_function(10) == build(p, 10).hilbert_function(10), "Hilbert functions differ");
}

void regularity(Checks& c) {
  struct Case {
    const char* text;
    int d;
    std::vector<std::vector<int>> betti;
  };
  const std::vector<Case> cases = {
      {k1, 1, {{0}, {1}}},
      {quantum_plane, 2, {{0}, {1, 1}, {2}}},
      {commutative3, 3, {{0}, {1, 1, 1}, {2, 2, 2}, {3}}},
  };
  for (const auto& cs : cases) {
    const P p = cli::parse_presentation(cs.text);
    timed(c, p.name, 5.0, [&] {
      Algebra<Scalar> A(build(p, 12));
      const auto g = gorenstein_check(A, 6, 12);
      c.expect(g.passes && g.d == cs.d, p.name + ": gorenstein_check " + g.reason);
      const auto res = minimal_resolution(A, 6, 12);
      c.expect(res.minimal && res.terminated, p.name + ": resolution not minimal or not finished");
      c.expect(res.betti == cs.betti, p.name + ": Betti shifts differ from the Koszul pattern");
    });
  }
  // (r, s) = (3, 2): shifts 0, 1^3, s^3 = 2^3, s + 1 = 3
}

void standard(Checks& c) {
  const P p = cli::parse_presentation(commutative3);
  const auto rep = standard_check(p);
  c.expect(rep.is_standard(), "commutative3 is not standard: " + rep.reason);
  c.expect(rep.r == 3 && rep.s == 2, "wrong (r, s)");
  c.expect(rep.Q && !determinant(*rep.Q).is_zero(), "Q missing or singular");
  if (rep.Q && rep.is_standard()) {
    // f = Q x^T M relation by relation
    for (int i = 0; i < 3; ++i) {
      NcPolynomial<Scalar> rhs;
      for (int j = 0; j < 3; ++j) {
        NcPolynomial<Scalar> xM;
        for (int l = 0; l < 3; ++l) xM += NcPolynomial<Scalar>(Word({static_cast<Letter>(l)}, p.alphabet)) * rep.M[l][j];
        rhs += xM * (*rep.Q)(i, j);
      }
      c.expect(rhs == rep.relations[i], "Q x^T M != f in row " + std::to_string(i));
    }
  }
  const auto qp = standard_check(cli::parse_presentation(quantum_plane));
  c.expect(qp.status == StandardStatus::not_applicable, "quantum plane status " + to_string(qp.status));
}

void hilbert_identity(Checks& c) {
  c.expect(resolution_shape_check(cli::parse_presentation(commutative3), 3, 2, 10), "fails for commutative3");
  c.expect(!resolution_shape_check(cli::parse_presentation("algebra F3 over Q { gens: x, y, z; rels: ; }"), 3, 2, 10),
           "holds for the free algebra");
}

void proj_cohomology(Checks& c) {
  for (const char* text : {plane, quantum_plane}) {
    const P p = cli::parse_presentation(text);
    Algebra<Scalar> A(build(p, 15));
    ProjCohomology<Scalar> pc(A, free_module<Scalar>({0}));
    for (int d = 0; d <= 5; ++d) {
      const auto cell = pc.cell(0, d, d + 3);
      c.expect(cell.stabilized == d + 1, p.name + ": H^0(R[" + std::to_string(d) + "])");
    }
    for (int d = 2; d <= 5; ++d) {
      const auto cell = pc.cell(1, -d, d + 3);
      c.expect(cell.stabilized == d - 1, p.name + ": H^1(R[-" + std::to_string(d) + "])");
    }
    const auto cd = cd_estimate(A, 2, -3, 3, 6);
    const auto gd = global_dimension(A, 6, 12);
    c.expect(gd.finite && gd.value == 2, p.name + ": global dimension " + gd.to_string());
    c.expect(cd.cd == 1 && cd.cd == gd.value - 1, p.name + ": cd = " + std::to_string(cd.cd));
  }
}

Charge z(long r, long d) { return Charge(Integer(r), Integer(d)); }

Charge random_charge(testing::Gen& g, int bound) {
  while (true) {
    const long r = g.uniform(0, bound), d = g.uniform(-bound, bound);
    if (r > 0 || d > 0) return z(r, d);
  }
}

SheafClass random_class(testing::Gen& g, int bound) {
  std::vector<Factor> fs;
  const int n = g.uniform(1, 4);
  for (int i = 0; i < n; ++i) fs.push_back({random_charge(g, bound), g.uniform(1, 3)});
  return SheafClass(fs);
}

Theta random_theta(testing::Gen& g) {
  if (g.coin()) return Rational(Integer(g.uniform(-20, 20)), Integer(g.uniform(1, 7)));
  static const int Ds[] = {2, 3, 5, 7, 13};
  return QuadraticNumber(Integer(g.uniform(-9, 9)), Integer(g.uniform(1, 5)), Integer(Ds[g.uniform(0, 4)]),
                         Integer(g.uniform(1, 6)));
}

void heart_suite(Checks& c) {
  long checked = 0;
  const long mismatches = testing::hn_exhaustive_mismatches(5, 4, &checked);
  c.expect(mismatches == 0, std::to_string(mismatches) + " HN mismatches against the brute-force oracle");
  c.expect(checked == 635375, "enumerated " + std::to_string(checked) + " multisets");

  testing::Gen g(101);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto F = random_class(g, 6);
    const auto th = random_theta(g);
    const auto s = torsion_split(F, th);
    for (const auto& f : s.t.factors()) bad += compare(slope(f.charge), th) <= 0;
    for (const auto& f : s.q.factors()) bad += compare(slope(f.charge), th) > 0;
    const auto again = torsion_split(s.t, th);
    bad += !(again.t == s.t && again.q.empty() && torsion_split(s.q, th).q == s.q);
    std::vector<Factor> merged = s.t.factors();
    merged.insert(merged.end(), s.q.factors().begin(), s.q.factors().end());
    bad += !(SheafClass(merged) == F);
  }
  c.expect(bad == 0, "torsion split invariants broken " + std::to_string(bad) + " times");

  int tested = 0;
  bad = 0;
  while (tested < 1000) {
    const auto th = random_theta(g);
    const auto s1 = torsion_split(random_class(g, 8), th);
    const auto s2 = torsion_split(random_class(g, 8), th);
    if (s1.t.empty() || s2.q.empty()) continue;
    ++tested;
    bad += hom_vanishes(s1.t, s2.q) != HomVanishing::certain_zero;
  }
  c.expect(bad == 0, "Hom(T, F) not certainly zero in " + std::to_string(bad) + " cases");

  bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Charge a = random_charge(g, 20), b = random_charge(g, 20), e = random_charge(g, 20);
    bad += euler_pairing(a, b) != -euler_pairing(b, a);
    bad += euler_pairing(a, Charge(b.rank + e.rank, b.deg + e.deg)) != euler_pairing(a, b) + euler_pairing(a, e);
    bad += euler_pairing(z(1, 0), a) != a.deg;
  }
  c.expect(bad == 0, "Euler pairing identities broken " + std::to_string(bad) + " times");

  std::vector<Charge> stable;
  for (long r = 0; r <= 20; ++r)
    for (long d = -20; d <= 20; ++d)
      if ((r > 0 || d > 0) && stable_p(z(r, d))) stable.push_back(z(r, d));
  bad = 0;
  for (const auto& a : stable) {
    for (const auto& b : stable) {
      const auto ab = hom_dim_stable(a, b);
      const auto ba = hom_dim_stable(b, a);
      bad += ab.hom - ab.ext1 != euler_pairing(a, b) || ab.ext1 != ba.hom;
    }
  }
  c.expect(bad == 0, "hom - ext1 = chi or Serre duality broken " + std::to_string(bad) + " times");
}

void real_multiplication(Checks& c) {
  testing::Gen g(202);
  static const int Ds[] = {2, 3, 5, 6, 7, 10, 11, 13, 19, 21};
  int bad_reduce = 0, bad_cf = 0, bad_fix = 0;
  for (int i = 0; i < 100; ++i) {
    const QuadraticNumber th(Integer(g.uniform(-30, 30)), Integer(g.coin() ? g.uniform(1, 6) : -g.uniform(1, 6)),
                             Integer(Ds[g.uniform(0, 9)]), Integer(g.uniform(1, 9)));
    const auto r = morita_reduce(th);
    bad_reduce += !(r.reduced.sign() > 0 && r.reduced < QuadraticNumber(Rational(1), th.D()) &&
                    mobius_act(word_matrix(r.word), th) == r.reduced);
    const auto cf = cf_expand(th);
    bad_cf += !(cf.periodic() && cf_value(cf, th.D()) == th);
    const auto F = fixing_matrix(th);
    // trace > 2 with det 1: real eigenvalues of equal sign summing to the trace, so both positive
    bad_fix += !(mobius_act(F, th) == th && F.trace() > Integer(2));
  }
  c.expect(bad_reduce == 0, "morita_reduce failed " + std::to_string(bad_reduce) + " times");
  c.expect(bad_cf == 0, "cf_expand failed to reconstruct " + std::to_string(bad_cf) + " times");
  c.expect(bad_fix == 0, "fixing_matrix failed " + std::to_string(bad_fix) + " times");

  const QuadraticNumber phi_conj(Integer(-1), Integer(1), Integer(5), Integer(2));
  const SL2Matrix golden(Integer(1), Integer(1), Integer(1), Integer(2));
  c.expect(fixing_matrix(phi_conj) == golden, "golden ratio fixing matrix " + fixing_matrix(phi_conj).to_string());
  const auto rep = rm_hilbert(golden, z(1, 0), phi_conj, 4);
  c.expect(rep.dims == std::vector<Integer>{Integer(1), Integer(3), Integer(8), Integer(21)}, "dims differ");
  std::vector<std::string> slopes;
  for (const auto& s : rep.slopes) slopes.push_back(s.to_string());
  c.expect(slopes == std::vector<std::string>{"1/2", "3/5", "8/13", "21/34"}, "slopes differ");
  for (std::size_t k = 0; k < rep.slopes.size(); ++k) {
    c.expect(compare(rep.slopes[k], Theta(phi_conj)) < 0, "slope above theta");
    if (k) c.expect(rep.slopes[k - 1] < rep.slopes[k], "slopes not strictly increasing");
  }
  c.expect(rep.recurrence_checked, "trace recurrence not verified");
  for (std::size_t k = 2; k < rep.dims.size(); ++k) {
    c.expect(rep.dims[k] == Integer(3) * rep.dims[k - 1] - rep.dims[k - 2], "dims violate the trace-3 recurrence");
  }
}

void gk(Checks& c) {
  const std::vector<std::pair<const char*, double>> finite = {{k1, 1.0}, {plane, 2.0}, {quantum_plane, 2.0}};
  for (const auto& [text, target] : finite) {
    const P p = cli::parse_presentation(text);
    timed(c, p.name, 5.0, [&] {
      const auto rep = gk_estimate(build(p, 60));
      c.expect(!rep.infinite && std::fabs(static_cast<double>(rep.estimate_value) - target) <= 0.15,
               p.name + ": estimate " + std::to_string(static_cast<double>(rep.estimate_value)));
    });
  }
  const P free = cli::parse_presentation("algebra Free2 over Q { gens: x, y; rels: ; }");
  timed(c, "Free2", 5.0, [&] { c.expect(gk_estimate(build(free, 60)).infinite, "free algebra not INFINITE"); });
}

struct Criterion {
  int id;
  std::string name;
  double limit;
  std::function<void(Checks&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "THCR example reproduction", 1.0, thcr_example},
      {2, "two-point Gamma_h dimensions", 0.1, two_point},
      {3, "twist equivalence", 1.0, twist_equivalence},
      {4, "regularity suite", 15.0, regularity},
      {5, "standard-algebra check", 1.0, standard},
      {6, "Hilbert identity", 1.0, hilbert_identity},
      {7, "Proj cohomology", 30.0, proj_cohomology},
      {8, "heart property suite", 10.0, heart_suite},
      {9, "real multiplication", 2.0, real_multiplication},
      {10, "GK-dimension estimator", 20.0, gk},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks c;
    const auto t0 = Clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    if (s >= cr.limit) {
      std::ostringstream os;
      os << "time limit exceeded";
      c.failures.push_back(os.str());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << cr.id << "  " << std::left << std::setw(30)
              << cr.name << std::right << std::fixed << std::setprecision(3) << std::setw(8) << s << "s  (limit "
              << std::setprecision(1) << cr.limit << "s)\n";
    for (const auto& f : c.failures) std::cout << "        " << f << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
