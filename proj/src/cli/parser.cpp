#include <map>

#include "ncproj/cli/cli.hpp"

namespace ncproj::cli {

namespace {

using Poly = NcPolynomial<Scalar>;

class Parser {
 public:
  Parser(std::string_view text) : tokens_(lex(text)) {}

  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  bool at(std::string_view s) const { return peek().kind != TokenKind::end && peek().text == s; }
  bool at_end() const { return peek().kind == TokenKind::end; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError({Severity::error, message, t.line, t.column});
  }
  std::string describe(const Token& t) const { return t.kind == TokenKind::end ? "end of input" : "'" + t.text + "'"; }

  Token expect(std::string_view s) {
    if (!at(s)) fail(peek(), "expected '" + std::string(s) + "', found " + describe(peek()));
    return take();
  }
  Token expect_identifier(const std::string& what) {
    if (peek().kind != TokenKind::identifier) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return take();
  }
  Integer expect_number(const std::string& what) {
    if (peek().kind != TokenKind::number) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return Integer::parse(take().text);
  }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected " + describe(peek()) + " after the end of the input");
  }
  bool accept(std::string_view s) {
    if (!at(s)) return false;
    take();
    return true;
  }

  // Expression grammar over the free algebra on the declared generators.
  const Alphabet* alphabet = nullptr;
  std::map<std::string, Letter> generators;
  FieldTag field;
  bool any_root = false;  // sqrt(D) for any D, as in theta literals
  std::optional<Integer> root_field;

  Poly expression() {
    Poly acc = term();
    while (at("+") || at("-")) {
      const bool minus = take().text == "-";
      Poly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (at("*") || at("/")) {
      const Token op = take();
      Poly f = factor();
      if (op.text == "*") {
        acc = acc * f;
      } else {
        if (f.is_zero()) fail(op, "division by zero");
        if (f.size() != 1 || !f.terms().begin()->first.empty()) fail(op, "only scalars can divide");
        acc = acc * Poly(inverse(f.terms().begin()->second));
      }
    }
    return acc;
  }

  Poly factor() {
    if (accept("-")) return -factor();
    if (accept("+")) return factor();
    Poly base = primary();
    if (at("^")) {
      const Token op = take();
      const Integer e = expect_number("an exponent");
      if (e > Integer(64)) fail(op, "exponent too large");
      Poly out(Scalar(1));
      for (long k = 0; k < e.to_long(); ++k) out = out * base;
      return out;
    }
    return base;
  }

  Poly primary() {
    const Token t = peek();
    if (t.kind == TokenKind::number) {
      take();
      return Poly(Scalar(Integer::parse(t.text)));
    }
    if (accept("(")) {
      Poly inner = expression();
      expect(")");
      return inner;
    }
    if (t.kind == TokenKind::identifier) {
      take();
      if (auto it = generators.find(t.text); it != generators.end()) {
        return Poly(Word({it->second}, *alphabet));
      }
      if (t.text == "q" && field.kind == FieldKind::rational_functions) return Poly(Scalar(RationalFunction::q()));
      if (t.text == "sqrt") {
        const bool paren = accept("(");
        const Token num = peek();
        const Integer D = expect_number("a radicand");
        if (paren) expect(")");
        if (!any_root && field.kind != FieldKind::quadratic) fail(t, "sqrt is only available over Q(sqrt(D))");
        const QuadraticNumber r = root(D, num);
        const Integer expected = any_root ? (root_field ? *root_field : r.D()) : field.D;
        if (r.D() != expected) fail(t, "sqrt(" + D.to_string() + ") does not lie in Q(sqrt(" + expected.to_string() + "))");
        root_field = r.D();
        return Poly(Scalar(r));
      }
      fail(t, "unknown identifier '" + t.text + "'");
    }
    fail(t, "expected an expression, found " + describe(t));
  }

  QuadraticNumber root(const Integer& D, const Token& where) {
    try {
      return QuadraticNumber(Integer(0), Integer(1), D, Integer(1));
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }

  FieldTag field_spec() {
    const Token t = expect_identifier("a field");
    if (t.text != "Q") fail(t, "unknown field '" + t.text + "'; expected Q, Q(q) or Q(sqrt(D))");
    if (!accept("(")) return FieldTag::rationals();
    const Token inner = expect_identifier("q or sqrt");
    FieldTag f;
    if (inner.text == "q") {
      f = FieldTag::rational_functions();
    } else if (inner.text == "sqrt") {
      const bool paren = accept("(");
      const Token num = peek();
      const Integer D = expect_number("a radicand");
      if (paren) expect(")");
      try {
        f = FieldTag::quadratic(QuadraticNumber(D).D());
      } catch (const Error& e) {
        fail(num, e.what());
      }
    } else {
      fail(inner, "expected q or sqrt, found '" + inner.text + "'");
    }
    expect(")");
    return f;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Scalar as_scalar(const Poly& p, const Token& where, Parser& ps) {
  if (p.is_zero()) return Scalar(0);
  if (p.size() != 1 || !p.terms().begin()->first.empty()) ps.fail(where, "expected a scalar");
  return p.terms().begin()->second;
}

}  // namespace

AlgebraPresentation<Scalar> parse_presentation(std::string_view text) {
  Parser ps(text);
  AlgebraPresentation<Scalar> p;
  ps.expect("algebra");
  p.name = ps.expect_identifier("an algebra name").text;
  ps.expect("over");
  p.field = ps.field_spec();
  ps.field = p.field;
  ps.expect("{");
  ps.expect("gens");
  ps.expect(":");
  std::vector<Alphabet::Generator> gens;
  while (true) {
    const Token g = ps.expect_identifier("a generator name");
    if (ps.generators.count(g.text)) ps.fail(g, "generator '" + g.text + "' declared twice");
    if (g.text == "sqrt" || (g.text == "q" && p.field.kind == FieldKind::rational_functions)) {
      ps.fail(g, "'" + g.text + "' is reserved for scalars");
    }
    int weight = 1;
    if (ps.accept(":")) {
      const Token w = ps.peek();
      const Integer wv = ps.expect_number("a weight");
      if (wv < Integer(1) || wv > Integer(1000)) ps.fail(w, "weights must be positive");
      weight = static_cast<int>(wv.to_long());
    }
    ps.generators.emplace(g.text, static_cast<Letter>(gens.size()));
    gens.push_back({g.text, weight});
    if (!ps.accept(",")) break;
  }
  ps.expect(";");
  p.alphabet = Alphabet(gens);
  p.order = MonomialOrder::identity(gens.size());
  ps.alphabet = &p.alphabet;
  ps.expect("rels");
  ps.expect(":");
  if (!ps.at(";")) {
    while (true) {
      const Token start = ps.peek();
      Poly r = ps.expression();
      if (r.is_zero()) ps.fail(start, "relation is zero");
      if (!r.is_homogeneous()) ps.fail(start, "relation is not homogeneous in the declared weights");
      if (r.degree() == 0) ps.fail(start, "relation has degree 0");
      p.relations.push_back(std::move(r));
      if (!ps.accept(",")) break;
    }
  }
  ps.expect(";");
  ps.expect("}");
  ps.expect_end();
  p.validate();
  return p;
}

std::string print_presentation(const AlgebraPresentation<Scalar>& p) {
  std::string out = "algebra " + p.name + " over " + p.field.to_string() + " { gens: ";
  for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
    if (i) out += ", ";
    out += p.alphabet[static_cast<Letter>(i)].symbol + ":" + std::to_string(p.alphabet.weight(static_cast<Letter>(i)));
  }
  out += "; rels: ";
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    if (i) out += ", ";
    out += p.relations[i].to_string(p.alphabet, p.order);
  }
  return out + "; }";
}

Scalar parse_scalar(std::string_view text, const FieldTag& field) {
  Parser ps(text);
  ps.field = field;
  const Token start = ps.peek();
  const Poly v = ps.expression();
  ps.expect_end();
  return embed(as_scalar(v, start, ps), field);
}

std::vector<Scalar> parse_scalar_list(std::string_view text, const FieldTag& field) {
  Parser ps(text);
  ps.field = field;
  std::vector<Scalar> out;
  while (true) {
    const Token start = ps.peek();
    out.push_back(embed(as_scalar(ps.expression(), start, ps), field));
    if (!ps.accept(",")) break;
  }
  ps.expect_end();
  return out;
}

std::vector<Scalar> parse_univariate(std::string_view text, const FieldTag& field) {
  Parser ps(text);
  ps.field = field;
  const Alphabet u = Alphabet::unit({"u"});
  ps.alphabet = &u;
  ps.generators.emplace("u", 0);
  const Poly v = ps.expression();
  ps.expect_end();
  std::vector<Scalar> out;
  for (const auto& [w, c] : v.terms()) {
    if (out.size() <= w.size()) out.resize(w.size() + 1, Scalar(0));
    out[w.size()] = embed(c, field);
  }
  if (out.empty()) out.push_back(Scalar(0));
  for (auto& c : out) c = embed(c, field);
  return out;
}

Theta parse_theta(std::string_view text) {
  Parser ps(text);
  ps.any_root = true;
  const Token start = ps.peek();
  const Poly v = ps.expression();
  ps.expect_end();
  const Scalar s = as_scalar(v, start, ps);
  if (auto r = s.as_rational()) return *r;
  return std::get<QuadraticNumber>(s.value());
}

FieldTag infer_field(std::string_view text) {
  FieldTag f;
  const auto tokens = lex(text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::identifier) continue;
    FieldTag g;
    if (tokens[i].text == "q") {
      g = FieldTag::rational_functions();
    } else if (tokens[i].text == "sqrt") {
      std::size_t j = i + 1;
      if (j < tokens.size() && tokens[j].text == "(") ++j;
      if (j >= tokens.size() || tokens[j].kind != TokenKind::number) continue;
      try {
        g = FieldTag::quadratic(QuadraticNumber(Integer(0), Integer(1), Integer::parse(tokens[j].text), Integer(1)).D());
      } catch (const Error& e) {
        throw ParseError({Severity::error, e.what(), tokens[j].line, tokens[j].column});
      }
    } else {
      continue;
    }
    try {
      f = join(f, g);
    } catch (const Error& e) {
      throw ParseError({Severity::error, e.what(), tokens[i].line, tokens[i].column});
    }
  }
  return f;
}

std::vector<std::vector<Scalar>> parse_matrix(std::string_view text, const FieldTag& field) {
  Parser ps(text);
  ps.field = field;
  std::vector<std::vector<Scalar>> rows;
  ps.expect("[");
  while (true) {
    const Token row_start = ps.expect("[");
    std::vector<Scalar> row;
    while (true) {
      const Token start = ps.peek();
      row.push_back(embed(as_scalar(ps.expression(), start, ps), field));
      if (!ps.accept(",")) break;
    }
    ps.expect("]");
    if (!rows.empty() && row.size() != rows.front().size()) ps.fail(row_start, "matrix rows have different lengths");
    rows.push_back(std::move(row));
    if (!ps.accept(",")) break;
  }
  ps.expect("]");
  ps.expect_end();
  return rows;
}

SL2Matrix parse_sl2(std::string_view text) {
  const auto rows = parse_matrix(text, FieldTag::rationals());
  if (rows.size() != 2 || rows[0].size() != 2) throw ParseError({Severity::error, "expected a 2x2 matrix", 1, 1});
  Integer e[4];
  for (int k = 0; k < 4; ++k) {
    const auto r = rows[k / 2][k % 2].as_rational();
    if (!r || !r->is_integer()) throw ParseError({Severity::error, "matrix entries must be integers", 1, 1});
    e[k] = r->num();
  }
  return SL2Matrix(e[0], e[1], e[2], e[3]);
}

namespace {

Integer signed_number(Parser& ps, const std::string& what) {
  const bool minus = ps.accept("-");
  if (!minus) ps.accept("+");
  const Integer v = ps.expect_number(what);
  return minus ? -v : v;
}

Charge charge_at(Parser& ps) {
  const Token start = ps.peek();
  const Integer r = signed_number(ps, "a rank");
  ps.expect(":");
  const Integer d = signed_number(ps, "a degree");
  try {
    return Charge(r, d);
  } catch (const Error& e) {
    ps.fail(start, e.what());
  }
}

}  // namespace

Charge parse_charge(std::string_view text) {
  Parser ps(text);
  const Charge z = charge_at(ps);
  ps.expect_end();
  return z;
}

SheafClass parse_sheaf_class(std::string_view text) {
  Parser ps(text);
  std::vector<Factor> fs;
  if (ps.accept("[")) {
    if (!ps.at("]")) {
      while (true) {
        Factor f{charge_at(ps), 1};
        if (ps.accept("*")) {
          const Token m = ps.peek();
          const Integer mult = ps.expect_number("a multiplicity");
          if (mult < Integer(1) || mult > Integer(1000000)) ps.fail(m, "multiplicity must be positive");
          f.multiplicity = static_cast<int>(mult.to_long());
        }
        fs.push_back(f);
        if (!ps.accept(",")) break;
      }
    }
    ps.expect("]");
  } else {
    fs.push_back({charge_at(ps), 1});
  }
  ps.expect_end();
  return SheafClass(fs);
}

}  // namespace ncproj::cli
