#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ncproj {

using Letter = std::uint16_t;

/// Generator symbols with positive integer weights.
class Alphabet {
 public:
  struct Generator {
    std::string symbol;
    int weight = 1;
    friend bool operator==(const Generator&, const Generator&) = default;
  };

  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);
  /// Unit-weight alphabet from symbols.
  static Alphabet unit(const std::vector<std::string>& symbols);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](Letter i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }
  int weight(Letter i) const { return gens_.at(i).weight; }
  bool all_unit_weight() const;
  /// Index of a symbol, or -1.
  int find(const std::string& symbol) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Generator> gens_;
};

/// Monomial of the free algebra: a sequence of generator indices together
/// with its weighted degree.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, const Alphabet& alphabet);
  /// Word of unit-weight letters.
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int degree() const { return degree_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Subword [pos, pos + len).
  Word sub(std::size_t pos, std::size_t len, const Alphabet& alphabet) const;
  /// Position of the first occurrence of needle, or npos.
  std::size_t find(const Word& needle) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  /// Storage order: degree, then lexicographic by letter index.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// "x*y*x" using the alphabet's symbols; "1" for the empty word.
  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::vector<Letter> letters_;
  int degree_ = 0;
};

/// Degree-lexicographic order with a configurable generator precedence.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// precedence lists generator indices from smallest to largest.
  explicit MonomialOrder(std::vector<Letter> precedence);
  static MonomialOrder identity(std::size_t n);

  /// Degree first, then lexicographic comparison of letters by precedence
  /// rank; a proper prefix is smaller.
  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  const std::vector<Letter>& precedence() const { return precedence_; }
  /// True when the precedence is the natural index order (or unset).
  bool is_natural() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int rank(Letter l) const { return l < rank_.size() ? rank_[l] : l; }
  std::vector<Letter> precedence_;
  std::vector<int> rank_;
};

}  // namespace ncproj
