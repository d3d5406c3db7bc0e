#include "ncproj/rewriting/automaton.hpp"

#include <algorithm>
#include <queue>

namespace ncproj {

PatternAutomaton::PatternAutomaton(const std::vector<Word>& patterns, std::size_t alphabet_size)
    : n_(alphabet_size) {
  std::vector<std::vector<int>> child(1, std::vector<int>(n_, -1));
  match_.assign(1, -1);
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    int s = 0;
    for (Letter l : patterns[p].letters()) {
      if (child[s][l] < 0) {
        child[s][l] = static_cast<int>(child.size());
        child.emplace_back(n_, -1);
        match_.push_back(-1);
      }
      s = child[s][l];
    }
    if (match_[s] < 0) match_[s] = static_cast<int>(p);
    pattern_len_.push_back(patterns[p].size());
  }
  go_.assign(child.size() * n_, 0);
  std::vector<int> fail(child.size(), 0);
  std::queue<int> bfs;
  for (std::size_t l = 0; l < n_; ++l) {
    if (child[0][l] >= 0) {
      go_[l] = child[0][l];
      bfs.push(child[0][l]);
    }
  }
  while (!bfs.empty()) {
    const int s = bfs.front();
    bfs.pop();
    if (match_[s] < 0) match_[s] = match_[fail[s]];
    for (std::size_t l = 0; l < n_; ++l) {
      const int c = child[s][l];
      if (c >= 0) {
        fail[c] = go_[fail[s] * n_ + l];
        go_[s * n_ + l] = c;
        bfs.push(c);
      } else {
        go_[s * n_ + l] = go_[fail[s] * n_ + l];
      }
    }
  }
}

bool PatternAutomaton::find(const Word& w, Match& out) const {
  int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s = next(s, w[i]);
    if (match_[s] >= 0) {
      out.pattern = static_cast<std::size_t>(match_[s]);
      out.start = i + 1 - pattern_len_[out.pattern];
      return true;
    }
  }
  return false;
}

std::vector<Integer> PatternAutomaton::count_avoiding(const Alphabet& alphabet, int max_degree) const {
  const std::size_t ns = states();
  std::vector<std::vector<Integer>> cnt(static_cast<std::size_t>(max_degree) + 1,
                                        std::vector<Integer>(ns, Integer(0)));
  cnt[0][0] = Integer(1);
  std::vector<Integer> out(static_cast<std::size_t>(max_degree) + 1, Integer(0));
  for (int d = 0; d <= max_degree; ++d) {
    for (std::size_t s = 0; s < ns; ++s) {
      const Integer& c = cnt[d][s];
      if (c.is_zero()) continue;
      out[d] += c;
      for (std::size_t l = 0; l < n_; ++l) {
        const int t = next(static_cast<int>(s), static_cast<Letter>(l));
        const int nd = d + alphabet.weight(static_cast<Letter>(l));
        if (match_[t] >= 0 || nd > max_degree) continue;
        cnt[nd][t] += c;
      }
    }
  }
  return out;
}

std::vector<Word> PatternAutomaton::avoiding_words(const Alphabet& alphabet, int d) const {
  std::vector<Word> out;
  std::vector<Letter> stack;
  auto rec = [&](auto& self, int state, int deg) -> void {
    if (deg == d) {
      out.emplace_back(stack, alphabet);
      return;
    }
    for (std::size_t l = 0; l < n_; ++l) {
      const int nd = deg + alphabet.weight(static_cast<Letter>(l));
      if (nd > d) continue;
      const int t = next(state, static_cast<Letter>(l));
      if (match_[t] >= 0) continue;
      stack.push_back(static_cast<Letter>(l));
      self(self, t, nd);
      stack.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncproj
