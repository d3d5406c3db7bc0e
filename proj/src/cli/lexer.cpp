#include <cctype>

#include "ncproj/cli/cli.hpp"

namespace ncproj::cli {

std::string Diagnostic::to_string() const {
  std::string out = severity == Severity::error ? "error" : "warning";
  if (line > 0) out += " at line " + std::to_string(line) + ", column " + std::to_string(column);
  return out + ": " + message;
}

std::vector<Token> lex(std::string_view text) {
  static constexpr std::string_view symbols = "{}:;,+-*/^()[]";
  static constexpr std::string_view root_sign = "\xE2\x88\x9A";
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t{TokenKind::end, "", line, column};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = TokenKind::identifier;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = TokenKind::number;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (text.substr(i, root_sign.size()) == root_sign) {
      t.kind = TokenKind::identifier;
      t.text = "sqrt";
      advance(root_sign.size());
    } else if (symbols.find(c) != std::string_view::npos) {
      t.kind = TokenKind::symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError({Severity::error, std::string("unexpected character '") + c + "'", line, column});
    }
    out.push_back(std::move(t));
  }
  out.push_back({TokenKind::end, "", line, column});
  return out;
}

}  // namespace ncproj::cli
