#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "ncproj/cli/cli.hpp"
#include "ncproj/coord_rings/coord_rings.hpp"
#include "ncproj/homology/homology.hpp"
#include "render.hpp"

namespace ncproj::cli {

namespace {

using P = AlgebraPresentation<Scalar>;

struct Input {
  std::string file;
  std::string text;
};

void add_input(CLI::App* sub, Input& in) {
  auto* f = sub->add_option("-f,--file", in.file, "presentation file");
  auto* e = sub->add_option("-e,--inline", in.text, "presentation text");
  f->excludes(e);
  e->excludes(f);
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

P load(const Input& in) {
  if (in.file.empty() && in.text.empty()) throw UsageError("one of --file or --inline is required");
  if (!in.text.empty()) return parse_presentation(in.text);
  std::ifstream is(in.file);
  if (!is) throw UsageError("cannot read " + in.file);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_presentation(ss.str());
}

json strings(const std::vector<NcPolynomial<Scalar>>& rels, const P& p) {
  json out = json::array();
  for (const auto& r : rels) out.push_back(r.to_string(p.alphabet, p.order));
  return out;
}

json matrix_json(const DenseMatrix<Scalar>& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

json sl2_json(const SL2Matrix& m) {
  return json::array({json::array({to_json(m.a()), to_json(m.b())}), json::array({to_json(m.c()), to_json(m.d())})});
}

std::string decimal(long double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << static_cast<double>(v);
  return os.str();
}

QuadraticNumber irrational(const Theta& th) {
  if (const auto* q = std::get_if<QuadraticNumber>(&th)) return *q;
  throw DomainError("theta must be a quadratic irrationality, got " + to_string(th));
}

json section_json(const Section<Scalar>& s) {
  NcPolynomial<Scalar> p;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    p.add_term(Word(std::vector<Letter>(i, 0)), s.coeffs[i]);
  }
  const Alphabet u = Alphabet::unit({"u"});
  std::string text = p.to_string(u, MonomialOrder::identity(1));
  for (std::size_t pos; (pos = text.find("u*u")) != std::string::npos;) {
    // collapse u*u*...*u into u^k
    std::size_t end = pos;
    int k = 0;
    while (end < text.size() && text[end] == 'u') {
      ++k;
      end += (end + 1 < text.size() && text[end + 1] == '*' && end + 2 < text.size() && text[end + 2] == 'u') ? 2 : 1;
    }
    text.replace(pos, end - pos, "u^" + std::to_string(k));
  }
  return json{{"level", s.level}, {"polynomial", text}};
}

const CLI::Validator positive(
    [](std::string& v) -> std::string {
      try {
        if (std::stol(v) > 0) return {};
      } catch (const std::exception&) {
      }
      return "value must be a positive integer, got '" + v + "'";
    },
    "POSITIVE");

const CLI::Validator nonnegative(
    [](std::string& v) -> std::string {
      try {
        if (std::stol(v) >= 0) return {};
      } catch (const std::exception&) {
      }
      return "value must be a nonnegative integer, got '" + v + "'";
    },
    "NONNEGATIVE");

json hilbert_json(const RewriteSystem<Scalar>& R, int N) { return to_json(R.hilbert_function(N)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative projective geometry toolkit", "ncproj"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::vector<std::pair<CLI::App*, std::function<json()>>> leaves;
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  const auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };

  int N = 12, p_max = 6, n_max = 12;
  std::optional<int> cutoff, s_max;
  Input input;
  std::string sigma, theta, matrix, charge, cls, other_cls, f_text, g_text, z1, z2, label = "theta";
  int r = 0, s = 0, j = 0, d = 0, shift = 0, k = 1, j_max = 2, d_lo = -3, d_hi = 3, r1 = 0, r2 = 0, terms = 10000;
  std::optional<int> m_level, n_level;

  // algebra
  auto* algebra = group("algebra", "graded algebras given by presentations");
  {
    auto* c = leaf(algebra, "hilbert", "Hilbert function up to N");
    add_input(c, input);
    c->add_option("--N", N)->check(positive);
    leaves.emplace_back(c, [&] {
      const P p = load(input);
      const auto R = build(p, N);
      return json{{"algebra", p.name}, {"field", p.field.to_string()}, {"N", N}, {"hilbert", hilbert_json(R, N)},
                  {"rules", R.rules().size()}};
    });
  }
  {
    auto* c = leaf(algebra, "gk", "Gelfand-Kirillov dimension estimate");
    add_input(c, input);
    c->add_option("--N", N)->check(positive);
    leaves.emplace_back(c, [&] {
      const P p = load(input);
      const auto g = gk_estimate(build(p, N));
      json rep{{"algebra", p.name},         {"N", N},
               {"dims", to_json(g.dims)},   {"filtration_dims", to_json(g.filtration_dims)},
               {"window", {g.window_lo, g.window_hi}},
               {"infinite", g.infinite},    {"low_confidence", g.low_confidence}};
      rep["estimate"] = g.infinite ? json("INFINITE") : json(g.estimate ? g.estimate->to_string() : "");
      rep["estimate_decimal"] = g.infinite ? json(nullptr) : json(decimal(g.estimate_value));
      return rep;
    });
  }
  {
    auto* c = leaf(algebra, "twist", "twist by a graded automorphism of degree 1");
    add_input(c, input);
    c->add_option("--sigma", sigma, "matrix [[..],[..]] on the generators")->required();
    c->add_option("--N", N)->check(positive);
    c->add_option("--smax", s_max)->check(positive);
    leaves.emplace_back(c, [&] {
      P p = load(input);
      p.field = join(p.field, infer_field(sigma));
      for (auto& rel : p.relations) {
        NcPolynomial<Scalar> lifted;
        for (const auto& [w, c] : rel.terms()) lifted.add_term(w, embed(c, p.field));
        rel = lifted;
      }
      const auto rows = parse_matrix(sigma, p.field);
      const int n = static_cast<int>(p.alphabet.size());
      if (static_cast<int>(rows.size()) != n || static_cast<int>(rows[0].size()) != n) {
        throw DomainError("sigma must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
      }
      DenseMatrix<Scalar> M(n, n);
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) M(i, l) = rows[i][l];
      const GradedEndomorphism<Scalar> sg = GradedEndomorphism<Scalar>(M);
      if (!check_automorphism(p, sg, N)) throw DomainError("sigma is not a graded automorphism of " + p.name);
      const P t = twist(p, sg, N, s_max);
      return json{{"algebra", p.name},
                  {"N", N},
                  {"s_max", s_max ? *s_max : p.max_relation_degree() + 1},
                  {"sigma", matrix_json(M)},
                  {"presentation", print_presentation(t)},
                  {"relations", strings(t.relations, t)},
                  {"hilbert", hilbert_json(build(p, N), N)},
                  {"hilbert_twisted", hilbert_json(build(t, N), N)}};
    });
  }
  {
    auto* c = leaf(algebra, "gorenstein", "minimal resolution, global dimension and AS-Gorenstein check");
    add_input(c, input);
    c->add_option("--N", N)->check(positive);
    c->add_option("--pmax", p_max)->check(positive);
    leaves.emplace_back(c, [&] {
      const P p = load(input);
      Algebra<Scalar> A(build(p, N));
      const auto res = minimal_resolution(A, p_max, N);
      const auto gd = global_dimension(A, p_max, N);
      const auto g = gorenstein_check(A, p_max, N);
      return json{{"algebra", p.name},
                  {"N", N},
                  {"p_max", p_max},
                  {"betti", res.betti},
                  {"minimal", res.minimal},
                  {"terminated", res.terminated},
                  {"global_dimension", gd.to_string()},
                  {"passes", g.passes},
                  {"d", g.d ? json(*g.d) : json(nullptr)},
                  {"ext_totals", g.ext_totals},
                  {"reason", g.reason}};
    });
  }
  {
    auto* c = leaf(algebra, "standard-check", "standard algebra test");
    add_input(c, input);
    leaves.emplace_back(c, [&] {
      const P p = load(input);
      const auto rep = standard_check(p);
      return json{{"algebra", p.name},
                  {"status", to_string(rep.status)},
                  {"is_standard", rep.is_standard()},
                  {"reason", rep.reason},
                  {"r", rep.r},
                  {"s", rep.s},
                  {"Q", rep.Q ? matrix_json(*rep.Q) : json(nullptr)},
                  {"C", rep.C ? matrix_json(*rep.C) : json(nullptr)},
                  {"relations", strings(rep.relations, p)}};
    });
  }
  {
    auto* c = leaf(algebra, "resolution-check", "H(t)(1 - r t + r t^s - t^(s+1)) = 1 up to t^N");
    add_input(c, input);
    c->add_option("--r", r)->required()->check(positive);
    c->add_option("--s", s)->required()->check(positive);
    c->add_option("--N", N)->check(positive);
    leaves.emplace_back(c, [&] {
      const P p = load(input);
      return json{{"algebra", p.name}, {"r", r}, {"s", s}, {"N", N}, {"holds", resolution_shape_check(p, r, s, N)}};
    });
  }

  // proj
  auto* proj = group("proj", "cohomology of the noncommutative projective scheme");
  {
    auto* c = leaf(proj, "cohomology", "H^j(M)(d) through the truncations R>=n");
    add_input(c, input);
    c->add_option("--j", j)->required()->check(nonnegative);
    c->add_option("--d", d)->required();
    c->add_option("--shift", shift, "module R(-shift)");
    c->add_option("--n-max", n_max)->check(positive);
    c->add_option("--N", cutoff, "degree cutoff; defaults to the least sufficient one")->check(positive);
    leaves.emplace_back(c, [&] {
      const P p = load(input);
      const int needed = n_max + j + 1 + std::max(1, [&] {
        int w = 1;
        for (const auto& g : p.alphabet.generators()) w = std::max(w, g.weight);
        return w;
      }()) + std::max(d, 0);
      const int top = cutoff ? *cutoff : needed;
      Algebra<Scalar> A(build(p, top));
      ProjCohomology<Scalar> pc(A, free_module<Scalar>({shift}));
      const auto cell = pc.cell(j, d, n_max);
      return json{{"algebra", p.name},
                  {"j", j},
                  {"d", d},
                  {"shift", shift},
                  {"n_max", n_max},
                  {"N", top},
                  {"values", cell.values},
                  {"stabilized", cell.stabilized ? json(*cell.stabilized) : json("UNSTABLE")},
                  {"stabilization_n", cell.stabilization_n}};
    });
  }
  {
    auto* c = leaf(proj, "cd", "cohomological dimension estimate");
    add_input(c, input);
    c->add_option("--jmax", j_max)->check(nonnegative);
    c->add_option("--dlo", d_lo);
    c->add_option("--dhi", d_hi);
    c->add_option("--n-max", n_max)->check(positive);
    c->add_option("--N", cutoff)->check(positive);
    leaves.emplace_back(c, [&] {
      const P p = load(input);
      if (d_lo > d_hi) throw DomainError("--dlo must not exceed --dhi");
      int w = 1;
      for (const auto& g : p.alphabet.generators()) w = std::max(w, g.weight);
      const int top = cutoff ? *cutoff : n_max + j_max + 1 + w + std::max(d_hi, 0);
      Algebra<Scalar> A(build(p, top));
      const auto rep = cd_estimate(A, j_max, d_lo, d_hi, n_max);
      json cells = json::array();
      for (const auto& cell : rep.cells) {
        cells.push_back({{"j", cell.j}, {"d", cell.d}, {"stabilized", *cell.stabilized}});
      }
      return json{{"algebra", p.name}, {"cd", rep.cd},     {"j_max", j_max}, {"d_lo", d_lo},
                  {"d_hi", d_hi},      {"n_max", n_max},  {"N", top},       {"cells", cells}};
    });
  }

  // thcr
  auto* thcr = group("thcr", "twisted homogeneous coordinate rings of the projective line");
  const auto load_sigma = [&](FieldTag& field) {
    field = infer_field(sigma);
    const auto v = parse_scalar_list(sigma, field);
    if (v.size() != 4) throw ParseError({Severity::error, "sigma needs four entries a,b,c,d", 1, 1});
    return P1Automorphism<Scalar>(v[0], v[1], v[2], v[3]);
  };
  {
    auto* c = leaf(thcr, "present", "presentation of B(P^1, sigma, O(k))");
    c->add_option("--sigma", sigma, "a,b,c,d for u -> (a u + b)/(c u + d)")->required();
    c->add_option("--dmax", N, "largest relation degree")->check(CLI::Range(2, 1000));
    c->add_option("--k", k, "degree of the line bundle")->check(positive);
    leaves.emplace_back(c, [&] {
      FieldTag field;
      const auto sg = load_sigma(field);
      const P p = thcr_presentation(sg, N, field, k);
      return json{{"sigma", sigma},
                  {"d_max", N},
                  {"k", k},
                  {"presentation", print_presentation(p)},
                  {"relations", strings(p.relations, p)},
                  {"hilbert", hilbert_json(build(p, N), N)}};
    });
  }
  {
    auto* c = leaf(thcr, "multiply", "product of sections f * g^(sigma^m)");
    c->add_option("--sigma", sigma)->required();
    c->add_option("--f", f_text, "polynomial in u")->required();
    c->add_option("--g", g_text, "polynomial in u")->required();
    c->add_option("--m", m_level, "level of f")->check(nonnegative);
    c->add_option("--n", n_level, "level of g")->check(nonnegative);
    leaves.emplace_back(c, [&] {
      FieldTag field;
      const auto sg = load_sigma(field);
      field = join(field, join(infer_field(f_text), infer_field(g_text)));
      const auto fc = parse_univariate(f_text, field);
      const auto gc = parse_univariate(g_text, field);
      const Section<Scalar> f(m_level.value_or(static_cast<int>(fc.size()) - 1), fc);
      const Section<Scalar> g(n_level.value_or(static_cast<int>(gc.size()) - 1), gc);
      return json{{"sigma", sigma},
                  {"f", section_json(f)},
                  {"g", section_json(g)},
                  {"product", section_json(thcr_multiply(f, g, sg))}};
    });
  }

  // gamma
  auto* gamma = group("gamma", "the ring of twisted endomorphisms of a triple");
  {
    auto* c = leaf(gamma, "two-point", "two points swapped by s");
    c->add_option("--r1", r1)->required()->check(nonnegative);
    c->add_option("--r2", r2)->required()->check(nonnegative);
    c->add_option("--n", N)->check(nonnegative);
    leaves.emplace_back(c, [&] {
      return json{{"r1", r1}, {"r2", r2}, {"n", N}, {"dims", two_point_hilbert({r1, r2}, N)}};
    });
  }

  // heart
  auto* heart = group("heart", "charge-level model of the heart at theta");
  {
    auto* c = leaf(heart, "hn", "Harder-Narasimhan filtration");
    c->add_option("--class", cls, "e.g. [1:0, 2:1*3]")->required();
    leaves.emplace_back(c, [&] {
      const auto F = parse_sheaf_class(cls);
      const auto f = hn(F);
      json layers = json::array();
      for (const auto& l : f.layers) layers.push_back({{"slope", l.slope.to_string()}, {"factors", l.factors.to_string()}});
      return json{{"class", F.to_string()},
                  {"layers", layers},
                  {"mu_min", f.mu_min().to_string()},
                  {"mu_max", f.mu_max().to_string()}};
    });
  }
  {
    auto* c = leaf(heart, "split", "torsion pair split at theta");
    c->add_option("--class", cls)->required();
    c->add_option("--theta", theta)->required();
    leaves.emplace_back(c, [&] {
      const auto F = parse_sheaf_class(cls);
      const Theta th = parse_theta(theta);
      const auto sp = torsion_split(F, th);
      return json{{"class", F.to_string()}, {"theta", to_string(th)}, {"t", sp.t.to_string()}, {"q", sp.q.to_string()}};
    });
  }
  {
    auto* c = leaf(heart, "hom", "Hom vanishing by slopes");
    c->add_option("--from", cls)->required();
    c->add_option("--to", other_cls)->required();
    leaves.emplace_back(c, [&] {
      const auto F = parse_sheaf_class(cls);
      const auto G = parse_sheaf_class(other_cls);
      json rep{{"from", F.to_string()}, {"to", G.to_string()}, {"vanishing", to_string(hom_vanishes(F, G))}};
      const auto single_stable = [](const SheafClass& X) {
        return X.factors().size() == 1 && X.factors()[0].multiplicity == 1 && stable_p(X.factors()[0].charge);
      };
      if (single_stable(F) && single_stable(G)) {
        const auto hd = hom_dim_stable(F.factors()[0].charge, G.factors()[0].charge);
        rep["hom"] = to_json(hd.hom);
        rep["ext1"] = to_json(hd.ext1);
      }
      return rep;
    });
  }
  {
    auto* c = leaf(heart, "euler", "Euler pairing");
    c->add_option("--z1", z1)->required();
    c->add_option("--z2", z2)->required();
    leaves.emplace_back(c, [&] {
      const Charge a = parse_charge(z1), b = parse_charge(z2);
      return json{{"z1", a.to_string()}, {"z2", b.to_string()}, {"chi", to_json(euler_pairing(a, b))}};
    });
  }

  // rm
  auto* rm = group("rm", "real multiplication");
  {
    auto* c = leaf(rm, "reduce", "Morita reduction of theta into (0,1)");
    c->add_option("--theta", theta)->required();
    leaves.emplace_back(c, [&] {
      const auto th = irrational(parse_theta(theta));
      const auto red = morita_reduce(th);
      return json{{"theta", th.to_string()},
                  {"reduced", red.reduced.to_string()},
                  {"word", word_to_string(red.word)},
                  {"minus_inverse", minus_inverse(red.reduced).to_string()}};
    });
  }
  {
    auto* c = leaf(rm, "cf", "continued fraction expansion");
    c->add_option("--theta", theta)->required();
    c->add_option("--terms", terms)->check(positive);
    leaves.emplace_back(c, [&] {
      const auto th = irrational(parse_theta(theta));
      const auto cf = cf_expand(th, terms);
      return json{{"theta", th.to_string()},
                  {"preperiod", to_json(cf.preperiod)},
                  {"period", to_json(cf.period)},
                  {"window", cf.window},
                  {"reconstructs", cf.periodic() && cf_value(cf, th.D()) == th}};
    });
  }
  {
    auto* c = leaf(rm, "fix", "hyperbolic matrix fixing theta");
    c->add_option("--theta", theta)->required();
    leaves.emplace_back(c, [&] {
      const auto th = irrational(parse_theta(theta));
      const auto g = fixing_matrix(th);
      return json{{"theta", th.to_string()}, {"matrix", sl2_json(g)}, {"trace", to_json(g.trace())}};
    });
  }
  {
    auto* c = leaf(rm, "hilbert", "Hilbert function of the algebra of (F, G)");
    c->add_option("--F", matrix, "[[a,b],[c,d]] acting on (deg, rank)")->required();
    c->add_option("--G", charge, "r:d")->required();
    c->add_option("--theta", theta)->required();
    c->add_option("--n", n_max)->check(positive);
    c->add_option("--label", label, "which torus label the theta belongs to");
    leaves.emplace_back(c, [&] {
      const auto rep = rm_hilbert(parse_sl2(matrix), parse_charge(charge), irrational(parse_theta(theta)), n_max, label);
      json charges = json::array(), slopes = json::array();
      for (const auto& z : rep.charges) charges.push_back(z.to_string());
      for (const auto& mu : rep.slopes) slopes.push_back(mu.to_string());
      return json{{"F", sl2_json(rep.F)},         {"G", rep.G.to_string()},   {"theta", rep.theta.to_string()},
                  {"theta_label", rep.theta_label}, {"n", n_max},             {"charges", charges},
                  {"slopes", slopes},             {"dims", to_json(rep.dims)}, {"recurrence_checked", rep.recurrence_checked}};
    });
  }

  try {
    std::vector<const char*> argv{"ncproj"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& [sub, handler] : leaves) {
    if (!sub->parsed()) continue;
    std::string title = "ncproj";
    for (const CLI::App* a = sub; a && a->get_parent(); a = a->get_parent()) {
      title.insert(std::string("ncproj").size(), " " + a->get_name());
    }
    try {
      out << render(handler(), format, title);
      return 0;
    } catch (const ParseError& e) {
      err << e.diagnostic().to_string() << "\n";
      return 2;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace ncproj::cli
