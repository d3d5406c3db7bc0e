#include "ncproj/core/word.hpp"

#include <algorithm>

#include "ncproj/core/errors.hpp"

namespace ncproj {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].weight <= 0) {
      throw DomainError("generator '" + gens_[i].symbol + "' must have positive weight");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gens_[j].symbol == gens_[i].symbol) {
        throw DomainError("duplicate generator symbol '" + gens_[i].symbol + "'");
      }
    }
  }
}

Alphabet Alphabet::unit(const std::vector<std::string>& symbols) {
  std::vector<Generator> gens;
  for (const auto& s : symbols) gens.push_back({s, 1});
  return Alphabet(std::move(gens));
}

bool Alphabet::all_unit_weight() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.weight == 1; });
}

int Alphabet::find(const std::string& symbol) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].symbol == symbol) return static_cast<int>(i);
  }
  return -1;
}

Word::Word(std::vector<Letter> letters, const Alphabet& alphabet) : letters_(std::move(letters)) {
  for (Letter l : letters_) degree_ += alphabet.weight(l);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  degree_ = static_cast<int>(letters_.size());
}

Word Word::sub(std::size_t pos, std::size_t len, const Alphabet& alphabet) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len), alphabet);
}

std::size_t Word::find(const Word& needle) const {
  if (needle.size() > size()) return npos;
  auto it = std::search(letters_.begin(), letters_.end(), needle.letters_.begin(), needle.letters_.end());
  return it == letters_.end() && !needle.empty() ? npos : static_cast<std::size_t>(it - letters_.begin());
}

Word operator*(const Word& a, const Word& b) {
  Word r;
  r.letters_.reserve(a.size() + b.size());
  r.letters_ = a.letters_;
  r.letters_.insert(r.letters_.end(), b.letters_.begin(), b.letters_.end());
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.letters_ <=> b.letters_;
}

std::string Word::to_string(const Alphabet& alphabet) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += "*";
    out += alphabet[letters_[i]].symbol;
  }
  return out;
}

MonomialOrder::MonomialOrder(std::vector<Letter> precedence) : precedence_(std::move(precedence)) {
  rank_.assign(precedence_.size(), -1);
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    const Letter l = precedence_[i];
    if (l >= rank_.size() || rank_[l] != -1) throw DomainError("precedence is not a permutation");
    rank_[l] = static_cast<int>(i);
  }
}

MonomialOrder MonomialOrder::identity(std::size_t n) {
  std::vector<Letter> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Letter>(i);
  return MonomialOrder(std::move(p));
}

bool MonomialOrder::is_natural() const {
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    if (precedence_[i] != i) return false;
  }
  return true;
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return rank(a[i]) <=> rank(b[i]);
  }
  return a.size() <=> b.size();
}

}  // namespace ncproj

#include "ncproj/core/nc_polynomial.hpp"

namespace ncproj {

std::string as_factor(const std::string& rendered) {
  int depth = 0;
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    const char ch = rendered[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-') && rendered[i - 1] == ' ') {
      return "(" + rendered + ")";
    }
  }
  return rendered;
}

}  // namespace ncproj
