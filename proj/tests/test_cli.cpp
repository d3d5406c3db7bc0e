#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ncproj/cli/cli.hpp"
#include "support/random.hpp"

using namespace ncproj;
using namespace ncproj::cli;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path source_dir{NCPROJ_SOURCE_DIR};

std::string corpus(const std::string& name) { return (source_dir / "data" / "presentations" / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json report(std::vector<std::string> args) {
  const auto o = invoke(std::move(args));
  EXPECT_EQ(o.code, 0) << o.err;
  return json::parse(o.out);
}

Word w(std::initializer_list<Letter> l) { return Word(std::vector<Letter>(l)); }

}  // namespace

TEST(Parser, QuantumPlane) {
  const auto p = parse_presentation("algebra QP over Q(q) { gens: x:1, y:1; rels: y*x - q*x*y; }");
  EXPECT_EQ(p.name, "QP");
  EXPECT_EQ(p.field, FieldTag::rational_functions());
  ASSERT_EQ(p.alphabet.size(), 2u);
  EXPECT_EQ(p.alphabet[0].symbol, "x");
  ASSERT_EQ(p.relations.size(), 1u);
  const Scalar q = parse_scalar("q", p.field);
  EXPECT_EQ(p.relations[0].coeff(w({1, 0})), Scalar(1));
  EXPECT_EQ(p.relations[0].coeff(w({0, 1})), -q);
  EXPECT_EQ(build(p, 6).hilbert_function(6), (std::vector<Integer>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(Parser, EmptyRelationsGiveFreeAlgebra) {
  const auto p = parse_presentation("algebra F over Q { gens: a, b, c; rels: ; }");
  EXPECT_TRUE(p.relations.empty());
  EXPECT_EQ(build(p, 4).hilbert_function(4), (std::vector<Integer>{1, 3, 9, 27, 81}));
  EXPECT_THROW(parse_presentation("algebra F over Q { gens: a; rels: }"), ParseError);
}

TEST(Parser, DefaultWeightsAndPowers) {
  const auto p = parse_presentation("algebra A over Q(sqrt(2)) { gens: x, y:2; rels: y*x - sqrt(8)*x*y, x^4 - (1/2)*y^2; }");
  EXPECT_EQ(p.field, FieldTag::quadratic(Integer(2)));
  EXPECT_EQ(p.relations[0].coeff(Word({0, 1}, p.alphabet)), -Scalar(QuadraticNumber(Integer(0), Integer(2), Integer(2), Integer(1))));
  EXPECT_EQ(p.alphabet.weight(0), 1);
  EXPECT_EQ(p.alphabet.weight(1), 2);
  EXPECT_EQ(p.relations[1].coeff(Word({0, 0, 0, 0}, p.alphabet)), Scalar(1));
  EXPECT_EQ(p.relations[1].coeff(Word({1, 1}, p.alphabet)), Scalar(Rational(Integer(-1), Integer(2))));
}

TEST(Parser, MissingSemicolonSpan) {
  const std::string text = "algebra QP over Q(q) {\n  gens: x:1, y:1\n  rels: y*x - q*x*y;\n}\n";
  try {
    parse_presentation(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.diagnostic().severity, Severity::error);
    EXPECT_EQ(e.diagnostic().line, 3);
    EXPECT_EQ(e.diagnostic().column, 3);
    EXPECT_NE(e.diagnostic().message.find("';'"), std::string::npos);
  }
}

TEST(Parser, ErrorsCarrySpans) {
  const std::vector<std::string> bad = {
      "algebra A over Q { gens: x, x; rels: ; }",
      "algebra A over Q { gens: x; rels: x*x - x; }",
      "algebra A over Q { gens: x; rels: x*x - q*x*x; }",
      "algebra A over Q { gens: x; rels: y; }",
      "algebra A over Q { gens: x:0; rels: ; }",
      "algebra A over Q { gens: x; rels: x - x; }",
      "algebra A over Q { gens: x; rels: x*x / x; }",
      "algebra A over R { gens: x; rels: ; }",
      "algebra A over Q { gens: x; rels: x*x; } trailing",
      "algebra A over Q { gens: x; rels: x $ x; }",
      "algebra A over Q { gens: x; rels: 1/0*x; }",
      "",
  };
  for (const auto& text : bad) {
    try {
      parse_presentation(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_GE(e.diagnostic().line, 1) << text;
      EXPECT_GE(e.diagnostic().column, 1) << text;
    }
  }
}

TEST(Parser, CorpusRoundTrip) {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(source_dir / "data" / "presentations")) {
    if (entry.path().extension() != ".alg") continue;
    ++seen;
    const auto p = parse_presentation(slurp(entry.path()));
    const std::string printed = print_presentation(p);
    const auto back = parse_presentation(printed);
    EXPECT_EQ(print_presentation(back), printed) << entry.path();
    EXPECT_EQ(back.name, p.name);
    EXPECT_EQ(back.field, p.field);
    EXPECT_EQ(back.alphabet, p.alphabet);
    EXPECT_EQ(back.relations, p.relations) << entry.path();
  }
  EXPECT_GE(seen, 6);
}

TEST(Parser, RandomRoundTrip) {
  ncproj::testing::Gen gen(11);
  const std::vector<FieldTag> fields = {FieldTag::rationals(), FieldTag::rational_functions(),
                                        FieldTag::quadratic(Integer(5))};
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraPresentation<Scalar> p;
    p.name = "R" + std::to_string(trial);
    p.field = fields[trial % 3];
    const int n = gen.uniform(1, 3);
    std::vector<Alphabet::Generator> gens;
    for (int i = 0; i < n; ++i) gens.push_back({std::string(1, static_cast<char>('a' + i)), gen.uniform(1, 2)});
    p.alphabet = Alphabet(gens);
    p.order = MonomialOrder::identity(n);
    const int rels = gen.uniform(0, 2);
    for (int r = 0; r < rels; ++r) {
      NcPolynomial<Scalar> f;
      const int deg = gen.uniform(2, 4);
      for (int t = 0; t < 3; ++t) {
        std::vector<Letter> letters;
        int d = 0;
        while (d < deg) {
          const Letter l = static_cast<Letter>(gen.uniform(0, n - 1));
          if (d + p.alphabet.weight(l) > deg) {
            if (p.alphabet.weight(0) == 1) {
              letters.push_back(0);
              ++d;
            } else {
              break;
            }
            continue;
          }
          letters.push_back(l);
          d += p.alphabet.weight(l);
        }
        if (d != deg) continue;
        Scalar c = gen.nonzero_rational();
        if (p.field == FieldTag::rational_functions() && gen.coin()) c = gen.rational_function();
        if (p.field == FieldTag::quadratic(Integer(5)) && gen.coin()) c = gen.quadratic(Integer(5));
        f.add_term(Word(std::move(letters), p.alphabet), c);
      }
      if (!f.is_zero()) p.relations.push_back(f);
    }
    const std::string printed = print_presentation(p);
    const auto back = parse_presentation(printed);
    EXPECT_EQ(back.relations, p.relations) << printed;
    EXPECT_EQ(print_presentation(back), printed);
  }
}

TEST(Parser, Literals) {
  EXPECT_EQ(to_string(parse_theta("(-1+1*sqrt(5))/2")), "(-1 + sqrt(5))/2");
  EXPECT_EQ(to_string(parse_theta("3/7")), "3/7");
  EXPECT_EQ(to_string(parse_theta("1 + √2")), "1 + sqrt(2)");
  EXPECT_EQ(parse_charge("3:-4").to_string(), "3:-4");
  EXPECT_THROW(parse_charge("-3:4"), ParseError);
  EXPECT_EQ(parse_sheaf_class("[2:1*3, 1:0]").to_string(), "[1:0, 2:1*3]");
  EXPECT_EQ(parse_sheaf_class("0:1").to_string(), "[0:1]");
  EXPECT_EQ(parse_sl2("[[2,1],[1,1]]").to_string(), "[[2,1],[1,1]]");
  EXPECT_THROW(parse_sl2("[[2,1],[1,2]]"), Error);
  EXPECT_THROW(parse_charge("1:"), ParseError);
  EXPECT_THROW(parse_theta("sqrt(4)"), ParseError);
  EXPECT_EQ(infer_field("q,0,0,1"), FieldTag::rational_functions());
  EXPECT_EQ(infer_field("[[1,sqrt(3)],[0,1]]"), FieldTag::quadratic(Integer(3)));
  const auto u = parse_univariate("(u+1)^2 - 1", FieldTag::rationals());
  EXPECT_EQ(u, (std::vector<Scalar>{Scalar(0), Scalar(2), Scalar(1)}));
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"algebra", "hilbert", "-f", corpus("plane.alg"), "--frob"}).code, 2);
  EXPECT_EQ(invoke({"algebra", "hilbert", "-f", corpus("plane.alg"), "--N", "0"}).code, 2);
  EXPECT_EQ(invoke({"algebra", "hilbert", "-f", corpus("plane.alg"), "--N", "-4"}).code, 2);
  EXPECT_EQ(invoke({"algebra", "hilbert"}).code, 2);
  EXPECT_EQ(invoke({"algebra", "hilbert", "-f", corpus("missing.alg")}).code, 2);
  const auto parse_fail = invoke({"algebra", "hilbert", "-e", "algebra A over Q { gens: x rels: ; }"});
  EXPECT_EQ(parse_fail.code, 2);
  EXPECT_NE(parse_fail.err.find("line 1, column 28"), std::string::npos) << parse_fail.err;
  EXPECT_TRUE(parse_fail.out.empty());
  EXPECT_EQ(invoke({"rm", "fix", "--theta", "1/2"}).code, 1);
  EXPECT_EQ(invoke({"algebra", "twist", "-f", corpus("plane.alg"), "--sigma", "[[1,1],[1,1]]"}).code, 1);
  EXPECT_EQ(invoke({"heart", "euler", "--z1", "1:0", "--z2", "-1:0"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "heart", "euler", "--z1", "1:0", "--z2", "0:1"}).code, 2);
}

TEST(Run, TableFormat) {
  setenv("NCPROJ_COLOR", "0", 1);
  const auto o = invoke({"gamma", "two-point", "--r1", "1", "--r2", "0", "--n", "6", "--format", "table"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("[1,0,1,0,1,0,1]"), std::string::npos) << o.out;
  EXPECT_EQ(o.out.find('\x1b'), std::string::npos);
}

TEST(Run, ReportValues) {
  auto r = report({"thcr", "present", "--sigma", "q,0,0,1", "--dmax", "8"});
  EXPECT_EQ(r["hilbert"], json({1, 2, 3, 4, 5, 6, 7, 8, 9}));
  const auto B = parse_presentation(r["presentation"].get<std::string>());
  ASSERT_EQ(B.relations.size(), 1u);
  const Scalar q = parse_scalar("q", FieldTag::rational_functions());
  EXPECT_EQ(B.relations[0].coeff(w({1, 0})), -q * B.relations[0].coeff(w({0, 1})));

  EXPECT_EQ(report({"gamma", "two-point", "--r1", "1", "--r2", "0", "--n", "6"})["dims"], json({1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(report({"rm", "fix", "--theta", "(-1+1*sqrt(5))/2"})["matrix"], json({{1, 1}, {1, 2}}));

  r = report({"algebra", "gorenstein", "-f", corpus("commutative3.alg")});
  EXPECT_EQ(r["global_dimension"], "3");
  EXPECT_EQ(r["d"], 3);
  EXPECT_EQ(r["betti"], json({{0}, {1, 1, 1}, {2, 2, 2}, {3}}));
  EXPECT_EQ(r["N"], 12);
  EXPECT_EQ(r["p_max"], 6);

  r = report({"proj", "cohomology", "-f", corpus("quantum_plane.alg"), "--j", "1", "--d", "0", "--shift", "4", "--n-max", "7"});
  EXPECT_EQ(r["stabilized"], 3);

  r = report({"heart", "hom", "--from", "2:1", "--to", "1:1"});
  EXPECT_EQ(r["hom"], 1);
  EXPECT_EQ(r["ext1"], 0);
  r = report({"rm", "hilbert", "--F", "[[1,1],[1,2]]", "--G", "1:0", "--theta", "(-1+sqrt(5))/2", "--n", "4"});
  EXPECT_EQ(r["dims"], json({1, 3, 8, 21}));
  EXPECT_EQ(r["slopes"], json({"1/2", "3/5", "8/13", "21/34"}));
}

namespace {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

std::vector<GoldenCase> golden_cases() {
  return {
      {"algebra_hilbert", {"algebra", "hilbert", "-f", corpus("quantum_plane.alg"), "--N", "8"}},
      {"algebra_hilbert_weighted", {"algebra", "hilbert", "-f", corpus("weighted.alg")}},
      {"algebra_gk_plane", {"algebra", "gk", "-f", corpus("plane.alg"), "--N", "60"}},
      {"algebra_gk_free", {"algebra", "gk", "-f", corpus("free2.alg"), "--N", "16"}},
      {"algebra_twist", {"algebra", "twist", "-f", corpus("plane.alg"), "--sigma", "[[q,0],[0,1]]", "--N", "10"}},
      {"algebra_twist_jordan", {"algebra", "twist", "-f", corpus("plane.alg"), "--sigma", "[[1,1],[0,1]]"}},
      {"algebra_gorenstein", {"algebra", "gorenstein", "-f", corpus("commutative3.alg")}},
      {"algebra_gorenstein_qp", {"algebra", "gorenstein", "-f", corpus("quantum_plane.alg"), "--N", "8", "--pmax", "4"}},
      {"algebra_standard_check", {"algebra", "standard-check", "-f", corpus("commutative3.alg")}},
      {"algebra_standard_check_qp", {"algebra", "standard-check", "-f", corpus("quantum_plane.alg")}},
      {"algebra_resolution_check", {"algebra", "resolution-check", "-f", corpus("commutative3.alg"), "--r", "3", "--s", "2", "--N", "10"}},
      {"proj_cohomology", {"proj", "cohomology", "-f", corpus("plane.alg"), "--j", "0", "--d", "3", "--n-max", "6"}},
      {"proj_cd", {"proj", "cd", "-f", corpus("quantum_plane.alg"), "--jmax", "2", "--dlo", "-2", "--dhi", "1", "--n-max", "5"}},
      {"thcr_present", {"thcr", "present", "--sigma", "q,0,0,1", "--dmax", "3"}},
      {"thcr_multiply", {"thcr", "multiply", "--sigma", "q,0,0,1", "--f", "u", "--g", "1+u"}},
      {"gamma_two_point", {"gamma", "two-point", "--r1", "1", "--r2", "0", "--n", "6"}},
      {"gamma_two_point_21", {"gamma", "two-point", "--r1", "2", "--r2", "1", "--n", "10"}},
      {"heart_hn", {"heart", "hn", "--class", "[1:0, 2:1*3, 0:1, 1:-2]"}},
      {"heart_split", {"heart", "split", "--class", "[1:0, 2:1*3, 0:1]", "--theta", "(-1+sqrt(5))/2"}},
      {"heart_hom", {"heart", "hom", "--from", "[1:1]", "--to", "[1:0]"}},
      {"heart_euler", {"heart", "euler", "--z1", "1:0", "--z2", "3:5"}},
      {"rm_reduce", {"rm", "reduce", "--theta", "(7+sqrt(13))/3"}},
      {"rm_cf", {"rm", "cf", "--theta", "sqrt(7)"}},
      {"rm_fix", {"rm", "fix", "--theta", "(-1+1*sqrt(5))/2"}},
      {"rm_hilbert", {"rm", "hilbert", "--F", "[[1,1],[1,2]]", "--G", "1:0", "--theta", "(-1+sqrt(5))/2", "--n", "4"}},
  };
}

}  // namespace

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
  const auto& c = GetParam();
  const auto first = invoke(c.args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(invoke(c.args).out, first.out) << "output is not deterministic";
  const fs::path file = source_dir / "tests" / "golden" / (c.name + ".json");
  const char* update = std::getenv("NCPROJ_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(file) << first.out;
    GTEST_SKIP() << "regenerated " << file;
  }
  ASSERT_TRUE(fs::exists(file)) << file << " missing; rerun with NCPROJ_UPDATE_GOLDEN=1";
  EXPECT_EQ(first.out, slurp(file));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Golden, EverySubcommandCovered) {
  const std::vector<std::string> paths = {
      "algebra hilbert", "algebra gk",   "algebra twist",  "algebra gorenstein", "algebra standard-check",
      "algebra resolution-check", "proj cohomology", "proj cd", "thcr present", "thcr multiply",
      "gamma two-point", "heart hn", "heart split", "heart hom", "heart euler",
      "rm reduce", "rm cf", "rm fix", "rm hilbert"};
  for (const auto& path : paths) {
    bool found = false;
    for (const auto& c : golden_cases()) found = found || (c.args[0] + " " + c.args[1]) == path;
    EXPECT_TRUE(found) << path;
  }
}
