#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncproj/core/field.hpp"

namespace ncproj {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
template <ExactField S>
using SparseVec = std::vector<std::pair<int, S>>;

template <ExactField S>
SparseVec<S> from_map(const std::map<int, S>& m) {
  SparseVec<S> v;
  v.reserve(m.size());
  for (const auto& [i, c] : m) {
    if (!is_zero(c)) v.emplace_back(i, c);
  }
  return v;
}

/// v + c * w
template <ExactField S>
SparseVec<S> axpy(const SparseVec<S>& v, const S& c, const SparseVec<S>& w) {
  SparseVec<S> out;
  out.reserve(v.size() + w.size());
  auto a = v.begin();
  auto b = w.begin();
  while (a != v.end() || b != w.end()) {
    if (b == w.end() || (a != v.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == v.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      S s = a->second + c * b->second;
      if (!is_zero(s)) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  return out;
}

template <ExactField S>
S entry(const SparseVec<S>& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, int k) { return e.first < k; });
  return it != v.end() && it->first == i ? it->second : S(0);
}

/// Row space in reduced echelon form: every row is monic at its pivot (its
/// first index) and vanishes at all other pivots.
template <ExactField S>
class RowBasis {
 public:
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int i) const { return rows_.count(i) != 0; }
  const std::map<int, SparseVec<S>>& rows() const { return rows_; }

  /// Representative of v modulo the span, vanishing at every pivot.
  SparseVec<S> reduce(const SparseVec<S>& v) const {
    SparseVec<S> out = v;
    for (const auto& [i, c] : v) {
      auto it = rows_.find(i);
      if (it != rows_.end()) out = axpy(out, S(-c), it->second);
    }
    return out;
  }

  /// Adds v to the span; returns false when it was already there.
  bool insert(const SparseVec<S>& v) {
    SparseVec<S> r = reduce(v);
    if (r.empty()) return false;
    const int p = r.front().first;
    const S inv = inverse(r.front().second);
    for (auto& [i, c] : r) c = c * inv;
    for (auto& [q, row] : rows_) {
      const S c = entry(row, p);
      if (!is_zero(c)) row = axpy(row, S(-c), r);
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

 private:
  std::map<int, SparseVec<S>> rows_;
};

/// Rank of a family of sparse vectors.
template <ExactField S>
std::size_t sparse_rank(const std::vector<SparseVec<S>>& vectors) {
  // echelon form without back substitution is enough for the rank
  std::map<int, SparseVec<S>> rows;
  for (const auto& v : vectors) {
    SparseVec<S> r = v;
    while (!r.empty()) {
      auto it = rows.find(r.front().first);
      if (it == rows.end()) break;
      r = axpy(r, S(-(r.front().second / it->second.front().second)), it->second);
    }
    if (!r.empty()) rows.emplace(r.front().first, std::move(r));
  }
  return rows.size();
}

/// Basis of {c : sum_i c_i images[i] = 0}, as sparse vectors over the indices
/// of images.
template <ExactField S>
std::vector<SparseVec<S>> sparse_kernel(const std::vector<SparseVec<S>>& images) {
  struct Row {
    SparseVec<S> value;
    SparseVec<S> combination;
  };
  std::map<int, Row> rows;
  std::vector<SparseVec<S>> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVec<S> r = images[i];
    SparseVec<S> comb{{static_cast<int>(i), S(1)}};
    while (!r.empty()) {
      auto it = rows.find(r.front().first);
      if (it == rows.end()) break;
      const S f = -(r.front().second / it->second.value.front().second);
      r = axpy(r, f, it->second.value);
      comb = axpy(comb, f, it->second.combination);
    }
    if (r.empty()) {
      kernel.push_back(std::move(comb));
    } else {
      const int p = r.front().first;
      rows.emplace(p, Row{std::move(r), std::move(comb)});
    }
  }
  return kernel;
}

}  // namespace ncproj
