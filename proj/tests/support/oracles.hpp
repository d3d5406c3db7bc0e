#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "ncproj/heart/heart.hpp"

namespace ncproj::testing {

/// Charge as plain integers: (rank, deg).
using SmallCharge = std::pair<long, long>;

/// Sign of mu(a) - mu(b) by cross multiplication; rank 0 means slope +inf.
inline int slope_cmp(const SmallCharge& a, const SmallCharge& b) {
  if (a.first == 0 || b.first == 0) return (a.first == 0) - (b.first == 0);
  const long l = a.second * b.first, r = b.second * a.first;
  return (l > r) - (l < r);
}

/// Every ordered partition of the factors into blocks such that each block is
/// semistable (no factor out-slopes the block) and block slopes strictly
/// increase. Blocks are returned as sorted charge lists.
inline std::set<std::vector<std::vector<SmallCharge>>> hn_bruteforce(const std::vector<SmallCharge>& factors) {
  constexpr int max_n = 8;
  std::set<std::vector<std::vector<SmallCharge>>> out;
  const int n = static_cast<int>(factors.size());
  if (n == 0 || n > max_n) return out;
  int block[max_n] = {};  // restricted growth string: an unordered set partition
  int order[max_n];       // position of each block in the ordered partition
  SmallCharge totals[max_n];
  while (true) {
    const int b = *std::max_element(block, block + n) + 1;
    for (int k = 0; k < b; ++k) totals[k] = {0, 0};
    for (int i = 0; i < n; ++i) {
      totals[block[i]].first += factors[i].first;
      totals[block[i]].second += factors[i].second;
    }
    bool semistable = true;
    for (int i = 0; i < n; ++i) semistable = semistable && slope_cmp(factors[i], totals[block[i]]) <= 0;
    if (semistable) {
      for (int k = 0; k < b; ++k) order[k] = k;
      do {
        bool increasing = true;
        for (int k = 0; k + 1 < b; ++k) increasing = increasing && slope_cmp(totals[order[k]], totals[order[k + 1]]) < 0;
        if (!increasing) continue;
        std::vector<std::vector<SmallCharge>> blocks(b);
        for (int i = 0; i < n; ++i) blocks[std::find(order, order + b, block[i]) - order].push_back(factors[i]);
        for (auto& bl : blocks) std::sort(bl.begin(), bl.end());
        out.insert(std::move(blocks));
      } while (std::next_permutation(order, order + b));
    }
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      const int prefix_max = *std::max_element(block, block + i);
      if (block[i] <= prefix_max) break;
      --i;
    }
    if (i == 0) break;
    ++block[i];
    std::fill(block + i + 1, block + n, 0);
  }
  return out;
}

/// All charges with 0 <= rank <= bound and |deg| <= bound.
inline std::vector<SmallCharge> small_charges(long bound) {
  std::vector<SmallCharge> out;
  for (long r = 0; r <= bound; ++r) {
    for (long d = -bound; d <= bound; ++d) {
      if (r == 0 && d <= 0) continue;
      out.emplace_back(r, d);
    }
  }
  return out;
}

/// Visits every multiset of 1..max_size charges drawn from the pool.
template <typename F>
void for_each_multiset(const std::vector<SmallCharge>& pool, int max_size, F&& visit) {
  std::vector<std::size_t> idx;
  std::vector<SmallCharge> current;
  const auto rec = [&](auto& self, std::size_t start) -> void {
    if (!current.empty()) visit(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      self(self, i);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

inline std::vector<std::vector<SmallCharge>> as_blocks(const HNFiltration& f) {
  std::vector<std::vector<SmallCharge>> out;
  for (const auto& layer : f.layers) {
    std::vector<SmallCharge> bl;
    for (const auto& fac : layer.factors.factors()) {
      for (int m = 0; m < fac.multiplicity; ++m) bl.emplace_back(fac.charge.rank.to_long(), fac.charge.deg.to_long());
    }
    std::sort(bl.begin(), bl.end());
    out.push_back(std::move(bl));
  }
  return out;
}

inline SheafClass sheaf_class(const std::vector<SmallCharge>& zs) {
  std::vector<Factor> fs;
  for (const auto& [r, d] : zs) fs.push_back({Charge(Integer(r), Integer(d)), 1});
  return SheafClass(std::move(fs));
}

/// Checks hn() against the brute force oracle on every multiset of at most
/// max_size charges with entries bounded by bound; returns the number of
/// multisets that disagree.
inline long hn_exhaustive_mismatches(long bound, int max_size, long* checked = nullptr) {
  long bad = 0, count = 0;
  for_each_multiset(small_charges(bound), max_size, [&](const std::vector<SmallCharge>& zs) {
    ++count;
    const auto candidates = hn_bruteforce(zs);
    if (candidates.size() != 1 || *candidates.begin() != as_blocks(hn(sheaf_class(zs)))) ++bad;
  });
  if (checked) *checked = count;
  return bad;
}

}  // namespace ncproj::testing
