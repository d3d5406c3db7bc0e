#pragma once

#include <vector>

#include "ncproj/core/integer.hpp"
#include "ncproj/core/word.hpp"

namespace ncproj {

/// Aho-Corasick automaton over a set of forbidden words. A state is "dead"
/// when some pattern is a suffix of the text read so far.
class PatternAutomaton {
 public:
  PatternAutomaton() = default;
  PatternAutomaton(const std::vector<Word>& patterns, std::size_t alphabet_size);

  struct Match {
    std::size_t pattern;
    std::size_t start;
  };

  int start() const { return 0; }
  int next(int state, Letter l) const { return go_[static_cast<std::size_t>(state) * n_ + l]; }
  bool dead(int state) const { return match_[state] >= 0; }
  std::size_t states() const { return match_.size(); }

  /// Leftmost-ending occurrence of a pattern in w, if any.
  bool find(const Word& w, Match& out) const;

  /// Number of words of each weighted degree 0..max_degree avoiding all patterns.
  std::vector<Integer> count_avoiding(const Alphabet& alphabet, int max_degree) const;
  /// All avoiding words of weighted degree exactly d, in storage order.
  std::vector<Word> avoiding_words(const Alphabet& alphabet, int d) const;

 private:
  std::size_t n_ = 0;
  std::vector<int> go_;
  std::vector<int> match_;
  std::vector<std::size_t> pattern_len_;
};

}  // namespace ncproj
