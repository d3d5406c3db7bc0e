#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ncproj/core/errors.hpp"
#include "ncproj/heart/heart.hpp"
#include "ncproj/presentations/presentation.hpp"
#include "ncproj/real_mult/real_mult.hpp"

namespace ncproj::cli {

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string message;
  int line = 0;  // 1-based; 0 when there is no source span
  int column = 0;
  std::string to_string() const;
};

/// Malformed input text. Always carries a source span.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic d) : std::runtime_error(d.to_string()), diag_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diag_; }

 private:
  Diagnostic diag_;
};

enum class TokenKind { identifier, number, symbol, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Splits text into identifiers, unsigned integers and one-character symbols.
/// The UTF-8 root sign is read as the identifier "sqrt".
std::vector<Token> lex(std::string_view text);

/// `algebra <name> over Q | Q(q) | Q(sqrt(D)) { gens: x:1, y; rels: r1, r2; }`
AlgebraPresentation<Scalar> parse_presentation(std::string_view text);
/// Inverse of parse_presentation.
std::string print_presentation(const AlgebraPresentation<Scalar>& p);

/// Scalar expression in the given field: integers, + - * / ^ ( ), q in Q(q),
/// sqrt(D) in Q(sqrt(D)).
Scalar parse_scalar(std::string_view text, const FieldTag& field);
/// Comma-separated scalars, e.g. "q,0,0,1".
std::vector<Scalar> parse_scalar_list(std::string_view text, const FieldTag& field);
/// Polynomial in one variable u, as coefficients of 1, u, u^2, ...
std::vector<Scalar> parse_univariate(std::string_view text, const FieldTag& field);
/// Rational or quadratic irrational, e.g. "(-1 + sqrt(5))/2" or "3/7".
Theta parse_theta(std::string_view text);
/// "[[a,b],[c,d]]" with scalar entries in the given field.
std::vector<std::vector<Scalar>> parse_matrix(std::string_view text, const FieldTag& field);
/// Field containing every scalar in the text: Q(q) if q occurs, Q(sqrt(D)) for sqrt(D), else Q.
FieldTag infer_field(std::string_view text);
SL2Matrix parse_sl2(std::string_view text);
/// "r:d".
Charge parse_charge(std::string_view text);
/// "[1:0, 2:1*3]"; a bare charge is accepted as a one-factor class.
SheafClass parse_sheaf_class(std::string_view text);

/// Runs one command; reports go to out, diagnostics to err. Returns 0 on
/// success, 1 on a domain error and 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncproj::cli
