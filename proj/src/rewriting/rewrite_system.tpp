#pragma once

#include <algorithm>
#include <map>
#include <sstream>

#include "ncproj/rewriting/rewrite_system.hpp"

namespace ncproj {

namespace detail {

struct OverlapSite {
  std::size_t left;
  std::size_t right;
  std::size_t shared;  // letters common to both leads
  Word word;
};

inline std::vector<OverlapSite> overlaps_between(const Word& u, const Word& v, std::size_t a,
                                                 std::size_t b, const Alphabet& alphabet) {
  std::vector<OverlapSite> out;
  const std::size_t m = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < m; ++k) {
    if (std::equal(u.letters().end() - static_cast<std::ptrdiff_t>(k), u.letters().end(),
                   v.letters().begin())) {
      out.push_back({a, b, k, u * v.sub(k, v.size() - k, alphabet)});
    }
  }
  return out;
}

template <ExactField S>
NcPolynomial<S> s_polynomial(const std::vector<RewriteRule<S>>& rules, const OverlapSite& o,
                             const Alphabet& alphabet) {
  const Word& u = rules[o.left].lead;
  const Word& v = rules[o.right].lead;
  const Word tail = v.sub(o.shared, v.size() - o.shared, alphabet);
  const Word head = u.sub(0, u.size() - o.shared, alphabet);
  return rules[o.left].as_polynomial().sandwich(Word(), tail) -
         rules[o.right].as_polynomial().sandwich(head, Word());
}

}  // namespace detail

template <ExactField S>
RewriteSystem<S>::RewriteSystem(Alphabet alphabet, MonomialOrder order, int cutoff)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), cutoff_(cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
  rebuild();
}

template <ExactField S>
void RewriteSystem<S>::rebuild() {
  std::vector<Word> leads;
  for (const auto& r : rules_) leads.push_back(r.lead);
  automaton_ = PatternAutomaton(leads, alphabet_.size());
}

template <ExactField S>
void RewriteSystem<S>::check_degree(int d) const {
  if (d > cutoff_) throw CutoffExceeded(d, cutoff_);
}

template <ExactField S>
NcPolynomial<S> RewriteSystem<S>::normal_form(const NcPolynomial<S>& p) const {
  check_degree(p.degree());
  std::map<Word, S> work(p.terms().begin(), p.terms().end());
  NcPolynomial<S> out;
  PatternAutomaton::Match m;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const Word w = it->first;
    const S c = it->second;
    work.erase(it);
    if (!automaton_.find(w, m)) {
      out.add_term(w, c);
      continue;
    }
    const RewriteRule<S>& rule = rules_[m.pattern];
    const Word prefix = w.sub(0, m.start, alphabet_);
    const std::size_t after = m.start + rule.lead.size();
    const Word suffix = w.sub(after, w.size() - after, alphabet_);
    for (const auto& [v, cv] : rule.rhs.terms()) {
      const S add = c * cv;
      auto [pos, inserted] = work.try_emplace(prefix * v * suffix, add);
      if (!inserted) {
        pos->second += add;
        if (is_zero(pos->second)) work.erase(pos);
      }
    }
  }
  return out;
}

template <ExactField S>
bool RewriteSystem<S>::is_normal(const Word& w) const {
  PatternAutomaton::Match m;
  return !automaton_.find(w, m);
}

template <ExactField S>
std::vector<Word> RewriteSystem<S>::normal_words(int d) const {
  check_degree(d);
  if (d < 0) return {};
  auto words = automaton_.avoiding_words(alphabet_, d);
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return order_.less(a, b); });
  return words;
}

template <ExactField S>
std::vector<Integer> RewriteSystem<S>::hilbert_function(int N) const {
  check_degree(N);
  return automaton_.count_avoiding(alphabet_, N);
}

template <ExactField S>
bool RewriteSystem<S>::ideal_member(const NcPolynomial<S>& p) const {
  return normal_form(p).is_zero();
}

template <ExactField S>
void RewriteSystem<S>::add_rule(const NcPolynomial<S>& reduced) {
  if (reduced.is_zero()) throw DomainError("cannot add a zero rule");
  const auto [lead, c] = reduced.lead(order_);
  const NcPolynomial<S> monic = reduced.scaled(inverse(c));
  rules_.push_back({lead, NcPolynomial<S>(lead) - monic});
  rebuild();
  for (std::size_t i = 0; i + 1 < rules_.size(); ++i) {
    if (rules_[i].lead.degree() == lead.degree()) rules_[i].rhs = normal_form(rules_[i].rhs);
  }
}

template <ExactField S>
std::vector<Obstruction<S>> RewriteSystem<S>::confluence_audit() const {
  std::vector<Obstruction<S>> out;
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      if (a != b && rules_[a].lead.find(rules_[b].lead) != Word::npos) {
        out.push_back({rules_[a].lead, a, b, NcPolynomial<S>()});
      }
      for (const auto& o : detail::overlaps_between(rules_[a].lead, rules_[b].lead, a, b, alphabet_)) {
        if (o.word.degree() > cutoff_) continue;
        auto r = normal_form(detail::s_polynomial(rules_, o, alphabet_));
        if (!r.is_zero()) out.push_back({o.word, a, b, std::move(r)});
      }
    }
  }
  return out;
}

template <ExactField S>
std::string RewriteSystem<S>::serialize() const {
  std::vector<const RewriteRule<S>*> sorted;
  for (const auto& r : rules_) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return order_.less(a->lead, b->lead); });
  std::ostringstream os;
  for (const auto* r : sorted) {
    os << r->lead.to_string(alphabet_) << " -> " << r->rhs.to_string(alphabet_, order_) << "\n";
  }
  return os.str();
}

template <ExactField S>
RewriteSystem<S> complete_truncated(const std::vector<NcPolynomial<S>>& relations,
                                    const Alphabet& alphabet, int cutoff,
                                    const MonomialOrder& order) {
  std::map<int, std::vector<NcPolynomial<S>>> by_degree;
  for (const auto& r : relations) {
    if (r.is_zero()) throw DomainError("zero relation");
    for (const auto& [w, c] : r.terms()) {
      for (Letter l : w.letters()) {
        if (l >= alphabet.size()) throw DomainError("relation uses an unknown generator");
      }
    }
    if (!r.is_homogeneous()) throw DomainError("relation is not homogeneous");
    if (r.degree() == 0) throw DomainError("relation of degree 0");
    if (r.degree() > cutoff) throw CutoffExceeded(r.degree(), cutoff);
    by_degree[r.degree()].push_back(r);
  }

  RewriteSystem<S> R(alphabet, order, cutoff);
  std::map<int, std::vector<detail::OverlapSite>> pending;
  auto register_overlaps = [&](std::size_t fresh) {
    const auto& rules = R.rules();
    for (std::size_t other = 0; other <= fresh; ++other) {
      auto add = [&](std::size_t a, std::size_t b) {
        for (auto& o : detail::overlaps_between(rules[a].lead, rules[b].lead, a, b, alphabet)) {
          if (o.word.degree() <= cutoff) pending[o.word.degree()].push_back(std::move(o));
        }
      };
      add(fresh, other);
      if (other != fresh) add(other, fresh);
    }
  };
  auto absorb = [&](const NcPolynomial<S>& p) {
    auto f = R.normal_form(p);
    if (f.is_zero()) return;
    R.add_rule(f);
    register_overlaps(R.rules().size() - 1);
  };

  for (int d = 1; d <= cutoff; ++d) {
    if (auto it = by_degree.find(d); it != by_degree.end()) {
      for (const auto& r : it->second) absorb(r);
    }
    auto it = pending.find(d);
    if (it == pending.end()) continue;
    auto sites = std::move(it->second);
    pending.erase(it);
    std::stable_sort(sites.begin(), sites.end(), [&](const auto& a, const auto& b) {
      return order.less(a.word, b.word);
    });
    for (const auto& o : sites) absorb(detail::s_polynomial(R.rules(), o, alphabet));
  }
  return R;
}

}  // namespace ncproj
