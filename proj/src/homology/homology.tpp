#pragma once

#include <algorithm>

#include "ncproj/homology/homology.hpp"

namespace ncproj {

// ---------------------------------------------------------------- Algebra

template <ExactField S>
Algebra<S>::Algebra(RewriteSystem<S> system) : R_(std::move(system)) {}

template <ExactField S>
int Algebra<S>::max_weight() const {
  int w = 1;
  for (const auto& g : alphabet().generators()) w = std::max(w, g.weight);
  return w;
}

template <ExactField S>
const std::vector<Word>& Algebra<S>::basis(int d) {
  static const std::vector<Word> empty;
  if (d < 0) return empty;
  auto it = bases_.find(d);
  if (it != bases_.end()) return it->second;
  auto words = R_.normal_words(d);
  std::sort(words.begin(), words.end());
  auto& idx = index_[d];
  for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], static_cast<int>(i));
  return bases_.emplace(d, std::move(words)).first->second;
}

template <ExactField S>
int Algebra<S>::index(int d, const Word& w) {
  basis(d);
  auto it = index_.at(d).find(w);
  if (it == index_.at(d).end()) throw DomainError("word is not a normal basis word");
  return it->second;
}

template <ExactField S>
NcPolynomial<S> Algebra<S>::multiply(ModuleSide side, const NcPolynomial<S>& a, const Word& w) {
  const NcPolynomial<S> ww(w);
  return R_.normal_form(side == ModuleSide::left ? a * ww : ww * a);
}

template <ExactField S>
const NcPolynomial<S>& Algebra<S>::letter_times(ModuleSide side, Letter l, int d, int idx) {
  const auto key = std::make_tuple(static_cast<int>(side), l, d, idx);
  auto it = letter_cache_.find(key);
  if (it != letter_cache_.end()) return it->second;
  const Word& w = basis(d)[idx];
  const Word x({l}, alphabet());
  NcPolynomial<S> p = R_.normal_form(NcPolynomial<S>(side == ModuleSide::left ? x * w : w * x));
  return letter_cache_.emplace(key, std::move(p)).first->second;
}

// ------------------------------------------------------- presentations

template <ExactField S>
GradedModulePresentation<S> GradedModulePresentation<S>::make(ModuleSide side, std::vector<int> shifts,
                                                              std::vector<std::vector<NcPolynomial<S>>> rows) {
  GradedModulePresentation<S> p;
  p.side = side;
  p.shifts = std::move(shifts);
  for (auto& row : rows) {
    if (row.size() != p.shifts.size()) throw DomainError("relation row length does not match the generators");
    std::optional<int> degree;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      if (!row[j].is_homogeneous()) throw DomainError("relation entry is not homogeneous");
      const int m = row[j].degree() + p.shifts[j];
      if (degree && *degree != m) throw DomainError("relation row is not homogeneous for the shifts");
      degree = m;
    }
    if (!degree) continue;
    p.rows.push_back(std::move(row));
    p.row_degrees.push_back(*degree);
  }
  return p;
}

template <ExactField S>
GradedModulePresentation<S> free_module(std::vector<int> shifts, ModuleSide side) {
  return GradedModulePresentation<S>::make(side, std::move(shifts), {});
}

template <ExactField S>
GradedModulePresentation<S> trivial_module(Algebra<S>& A, ModuleSide side) {
  std::vector<std::vector<NcPolynomial<S>>> rows;
  for (std::size_t l = 0; l < A.alphabet().size(); ++l) {
    rows.push_back({NcPolynomial<S>(Word({static_cast<Letter>(l)}, A.alphabet()))});
  }
  return GradedModulePresentation<S>::make(side, {0}, std::move(rows));
}

template <ExactField S>
GradedModulePresentation<S> truncation_quotient(Algebra<S>& A, int n, ModuleSide side) {
  std::vector<std::vector<NcPolynomial<S>>> rows;
  for (int t = std::max(n, 0); t < std::max(n, 0) + A.max_weight(); ++t) {
    for (const auto& w : A.basis(t)) rows.push_back({NcPolynomial<S>(w)});
  }
  return GradedModulePresentation<S>::make(side, {0}, std::move(rows));
}

template <ExactField S>
GradedModulePresentation<S> truncation_ideal(Algebra<S>& A, int n, int top, ModuleSide side) {
  std::vector<std::vector<NcPolynomial<S>>> rows;
  std::vector<int> degrees;
  for (int t = std::max(n, 0); t < std::max(n, 0) + A.max_weight(); ++t) {
    for (const auto& w : A.basis(t)) {
      rows.push_back({NcPolynomial<S>(w)});
      degrees.push_back(t);
    }
  }
  return syzygies(A, side, {0}, rows, degrees, top);
}

// ------------------------------------------------------------- modules

template <ExactField S>
GradedModule<S>::GradedModule(Algebra<S>& A, GradedModulePresentation<S> p) : A_(A), p_(std::move(p)) {}

template <ExactField S>
typename GradedModule<S>::Piece& GradedModule<S>::layout(int t) {
  auto it = pieces_.find(t);
  if (it != pieces_.end()) return it->second;
  Piece pc;
  int offset = 0;
  for (std::size_t j = 0; j < p_.shifts.size(); ++j) {
    pc.offsets.push_back(offset);
    const int n = A_.dim(t - p_.shifts[j]);
    for (int i = 0; i < n; ++i) pc.cells.emplace_back(static_cast<int>(j), i);
    offset += n;
  }
  return pieces_.emplace(t, std::move(pc)).first->second;
}

template <ExactField S>
SparseVec<S> GradedModule<S>::free_vector(int t, const std::vector<NcPolynomial<S>>& element) {
  Piece& pc = layout(t);
  std::map<int, S> acc;
  for (std::size_t j = 0; j < element.size(); ++j) {
    if (element[j].is_zero()) continue;
    const int d = t - p_.shifts[j];
    const auto nf = A_.system().normal_form(element[j]);
    for (const auto& [w, c] : nf.terms()) {
      if (w.degree() != d) throw DomainError("module element is not homogeneous of the expected degree");
      acc[pc.offsets[j] + A_.index(d, w)] += c;
    }
  }
  return from_map(acc);
}

template <ExactField S>
SparseVec<S> GradedModule<S>::letter_action(Letter l, int t, const SparseVec<S>& v) {
  const int w = A_.alphabet().weight(l);
  Piece& src = layout(t);
  Piece& dst = layout(t + w);
  std::map<int, S> acc;
  for (const auto& [idx, c] : v) {
    const auto [j, wi] = src.cells[idx];
    const int d = t - p_.shifts[j];
    for (const auto& [word, cw] : A_.letter_times(p_.side, l, d, wi).terms()) {
      acc[dst.offsets[j] + A_.index(d + w, word)] += c * cw;
    }
  }
  return from_map(acc);
}

template <ExactField S>
typename GradedModule<S>::Piece& GradedModule<S>::piece(int t) {
  if (built_.count(t)) return pieces_.at(t);
  const int lowest = p_.shifts.empty() ? 0 : *std::min_element(p_.shifts.begin(), p_.shifts.end());
  for (std::size_t l = 0; l < A_.alphabet().size(); ++l) {
    const int s = t - A_.alphabet().weight(static_cast<Letter>(l));
    if (s >= lowest) piece(s);
  }
  Piece& pc = layout(t);
  for (std::size_t l = 0; l < A_.alphabet().size(); ++l) {
    const int s = t - A_.alphabet().weight(static_cast<Letter>(l));
    if (s < lowest) continue;
    for (const auto& [pivot, row] : pieces_.at(s).K.rows()) {
      pc.K.insert(letter_action(static_cast<Letter>(l), s, row));
    }
  }
  for (std::size_t k = 0; k < p_.rows.size(); ++k) {
    if (p_.row_degrees[k] == t) pc.K.insert(free_vector(t, p_.rows[k]));
  }
  pc.quotient_index.assign(pc.cells.size(), -1);
  for (std::size_t i = 0; i < pc.cells.size(); ++i) {
    if (!pc.K.is_pivot(static_cast<int>(i))) {
      pc.quotient_index[i] = static_cast<int>(pc.representative.size());
      pc.representative.push_back(static_cast<int>(i));
    }
  }
  built_[t] = true;
  return pc;
}

template <ExactField S>
int GradedModule<S>::dim(int t) {
  return static_cast<int>(piece(t).representative.size());
}

template <ExactField S>
RowBasis<S> GradedModule<S>::augmentation_part(int t) {
  const int lowest = p_.shifts.empty() ? 0 : *std::min_element(p_.shifts.begin(), p_.shifts.end());
  RowBasis<S> out;
  for (std::size_t l = 0; l < A_.alphabet().size(); ++l) {
    const int s = t - A_.alphabet().weight(static_cast<Letter>(l));
    if (s < lowest) continue;
    for (const auto& [pivot, row] : piece(s).K.rows()) out.insert(letter_action(static_cast<Letter>(l), s, row));
  }
  return out;
}

template <ExactField S>
SparseVec<S> GradedModule<S>::act(const NcPolynomial<S>& a, int t, int q) {
  if (a.is_zero()) return {};
  Piece& src = piece(t);
  const int rep = src.representative.at(q);
  const auto [j, wi] = src.cells[rep];
  const int d = t - p_.shifts[j];
  const Word& w = A_.basis(d)[wi];
  const int e = a.degree();
  std::vector<NcPolynomial<S>> element(p_.shifts.size());
  element[j] = A_.multiply(p_.side, a, w);
  Piece& dst = piece(t + e);
  const SparseVec<S> reduced = dst.K.reduce(free_vector(t + e, element));
  SparseVec<S> out;
  out.reserve(reduced.size());
  for (const auto& [i, c] : reduced) out.emplace_back(dst.quotient_index[i], c);
  return out;
}

// ---------------------------------------------------------- resolutions

template <ExactField S>
bool FreeResolution<S>::is_minimal() const {
  for (std::size_t i = 1; i < maps.size(); ++i) {
    for (const auto& row : maps[i]) {
      for (const auto& a : row) {
        if (!a.is_zero() && a.min_degree() == 0) return false;
      }
    }
  }
  return true;
}

template <ExactField S>
GradedModulePresentation<S> syzygies(Algebra<S>& A, ModuleSide side, const std::vector<int>& target_shifts,
                                     const std::vector<std::vector<NcPolynomial<S>>>& rows,
                                     const std::vector<int>& row_degrees, int top) {
  GradedModule<S> target(A, free_module<S>(target_shifts, side));
  GradedModule<S> source(A, free_module<S>(row_degrees, side));
  GradedModulePresentation<S> out;
  out.side = side;
  out.shifts = row_degrees;
  if (rows.empty()) return out;
  const int lowest = *std::min_element(row_degrees.begin(), row_degrees.end());
  std::map<int, std::vector<SparseVec<S>>> Z;
  for (int t = lowest; t <= top; ++t) {
    const int n = source.free_dim(t);
    std::vector<SparseVec<S>> images;
    images.reserve(n);
    for (int idx = 0; idx < n; ++idx) {
      const auto [k, ui] = source.cell(t, idx);
      const Word& u = A.basis(t - row_degrees[k])[ui];
      std::vector<NcPolynomial<S>> element(target_shifts.size());
      for (std::size_t j = 0; j < target_shifts.size(); ++j) {
        if (rows[k][j].is_zero()) continue;
        // generator k times u: u * a (left) or a * u (right)
        element[j] = A.multiply(side == ModuleSide::left ? ModuleSide::right : ModuleSide::left, rows[k][j], u);
      }
      images.push_back(target.free_vector(t, element));
    }
    auto kernel = sparse_kernel(images);
    RowBasis<S> aug;
    for (std::size_t l = 0; l < A.alphabet().size(); ++l) {
      const int s = t - A.alphabet().weight(static_cast<Letter>(l));
      auto it = Z.find(s);
      if (it == Z.end()) continue;
      for (const auto& z : it->second) aug.insert(source.letter_action(static_cast<Letter>(l), s, z));
    }
    for (const auto& z : kernel) {
      if (!aug.insert(z)) continue;
      std::vector<NcPolynomial<S>> row(row_degrees.size());
      for (const auto& [idx, c] : z) {
        const auto [k, ui] = source.cell(t, idx);
        row[k].add_term(A.basis(t - row_degrees[k])[ui], c);
      }
      out.rows.push_back(std::move(row));
      out.row_degrees.push_back(t);
    }
    Z.emplace(t, std::move(kernel));
  }
  return out;
}

template <ExactField S>
FreeResolution<S> resolve(Algebra<S>& A, const GradedModulePresentation<S>& P, int p_max, int top) {
  FreeResolution<S> F;
  F.side = P.side;
  F.top_degree = top;
  F.shifts.push_back(P.shifts);
  F.maps.emplace_back();
  if (p_max < 1) return F;

  // minimal subset of the given relations
  GradedModule<S> M(A, P);
  std::vector<std::size_t> order(P.rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return P.row_degrees[a] < P.row_degrees[b]; });
  std::vector<int> kept_degrees;
  std::vector<std::vector<NcPolynomial<S>>> kept_rows;
  std::optional<RowBasis<S>> current;
  int current_degree = -1;
  for (std::size_t k : order) {
    const int t = P.row_degrees[k];
    if (t > top) break;
    if (t != current_degree) {
      current = M.augmentation_part(t);
      current_degree = t;
    }
    if (current->insert(M.free_vector(t, P.rows[k]))) {
      kept_degrees.push_back(t);
      kept_rows.push_back(P.rows[k]);
    }
  }
  F.shifts.push_back(kept_degrees);
  F.maps.push_back(kept_rows);

  for (int i = 2; i <= p_max && !F.shifts.back().empty(); ++i) {
    auto syz = syzygies(A, P.side, F.shifts[i - 2], F.maps[i - 1], F.shifts[i - 1], top);
    F.shifts.push_back(syz.row_degrees);
    F.maps.push_back(std::move(syz.rows));
  }
  return F;
}

// ------------------------------------------------------------ Hom / Ext

namespace detail {

/// Columns of Hom(F_src, M[d]) -> Hom(F_next, M[d]), phi -> phi o partial,
/// one per unknown (generator j, basis vector of M_(l_j + d)).
template <ExactField S>
std::vector<SparseVec<S>> hom_columns(const std::vector<int>& shifts,
                                      const std::vector<std::vector<NcPolynomial<S>>>& rows,
                                      const std::vector<int>& row_degrees, GradedModule<S>& M, int d) {
  std::vector<int> offsets;
  int offset = 0;
  for (int m : row_degrees) {
    offsets.push_back(offset);
    offset += M.dim(m + d);
  }
  std::vector<SparseVec<S>> columns;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const int n = M.dim(shifts[j] + d);
    for (int q = 0; q < n; ++q) {
      SparseVec<S> col;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        for (const auto& [i, c] : M.act(rows[k][j], shifts[j] + d, q)) col.emplace_back(offsets[k] + i, c);
      }
      columns.push_back(std::move(col));
    }
  }
  return columns;
}

template <ExactField S>
long hom_space_dim(const std::vector<int>& shifts, GradedModule<S>& M, int d) {
  long n = 0;
  for (int l : shifts) n += M.dim(l + d);
  return n;
}

}  // namespace detail

template <ExactField S>
long graded_hom_dim(Algebra<S>&, const GradedModulePresentation<S>& source, GradedModule<S>& target, int d) {
  if (source.side != target.presentation().side) throw DomainError("Hom between modules of different sides");
  const long n = detail::hom_space_dim(source.shifts, target, d);
  const auto cols = detail::hom_columns(source.shifts, source.rows, source.row_degrees, target, d);
  return n - static_cast<long>(sparse_rank(cols));
}

template <ExactField S>
long ext_dim(const FreeResolution<S>& F, GradedModule<S>& M, int i, int d) {
  if (i < 0) return 0;
  if (i > F.length_computed()) {
    if (!F.shifts.back().empty()) throw DomainError("resolution too short for Ext^" + std::to_string(i));
    return 0;
  }
  if (F.shifts[i].empty()) return 0;
  long rank_out = 0;
  if (i + 1 <= F.length_computed()) {
    rank_out = static_cast<long>(
        sparse_rank(detail::hom_columns(F.shifts[i], F.maps[i + 1], F.shifts[i + 1], M, d)));
  } else {
    throw DomainError("resolution too short for Ext^" + std::to_string(i));
  }
  long rank_in = 0;
  if (i >= 1) {
    rank_in = static_cast<long>(sparse_rank(detail::hom_columns(F.shifts[i - 1], F.maps[i], F.shifts[i], M, d)));
  }
  return detail::hom_space_dim(F.shifts[i], M, d) - rank_out - rank_in;
}

template <ExactField S>
ResolutionReport minimal_resolution(Algebra<S>& A, int p_max, int N) {
  const auto F = resolve(A, trivial_module(A), p_max + 1, N);
  ResolutionReport rep;
  rep.p_max = p_max;
  rep.N = N;
  rep.minimal = F.is_minimal();
  for (int i = 0; i <= std::min(p_max, F.length_computed()); ++i) {
    if (F.shifts[i].empty()) {
      rep.terminated = true;
      break;
    }
    auto b = F.shifts[i];
    std::sort(b.begin(), b.end());
    rep.betti.push_back(std::move(b));
  }
  if (!rep.terminated && F.length_computed() == p_max + 1 && F.shifts.back().empty()) rep.terminated = true;
  return rep;
}

template <ExactField S>
GlobalDimension global_dimension(Algebra<S>& A, int p_max, int N) {
  const auto F = resolve(A, trivial_module(A), p_max + 1, N);
  for (int i = 0; i <= F.length_computed(); ++i) {
    if (F.shifts[i].empty()) return {true, i - 1};
  }
  return {false, p_max};
}

template <ExactField S>
GradedDims ext_k_A(Algebra<S>& A, int i, int N) {
  const auto F = resolve(A, trivial_module(A), i + 1, N);
  int L = 0;
  for (int k = std::max(i - 1, 0); k <= std::min(i + 1, F.length_computed()); ++k) {
    for (int l : F.shifts[k]) L = std::max(L, l);
  }
  const int delta_lo = -N;
  const int delta_hi = N - L;
  if (delta_hi < delta_lo) throw DomainError("empty degree window for Ext^" + std::to_string(i));
  GradedModule<S> M(A, free_module<S>({0}));
  GradedDims out;
  out.lo = -delta_hi;
  for (int ell = out.lo; ell <= -delta_lo; ++ell) out.dims.push_back(ext_dim(F, M, i, -ell));
  return out;
}

template <ExactField S>
GorensteinReport gorenstein_check(Algebra<S>& A, int p_max, int N) {
  GorensteinReport rep;
  const auto gd = global_dimension(A, p_max, N);
  if (!gd.finite) {
    rep.reason = "global dimension is at least " + std::to_string(p_max);
    return rep;
  }
  rep.d = gd.value;
  for (int i = 0; i <= gd.value; ++i) rep.ext_totals.push_back(ext_k_A(A, i, N).total());
  rep.passes = rep.ext_totals.back() == 1;
  for (int i = 0; i < gd.value; ++i) {
    if (rep.ext_totals[i] != 0) rep.passes = false;
  }
  if (!rep.passes) {
    rep.reason = rep.ext_totals.back() != 1 ? "Ext^d(k, A) is not one-dimensional"
                                            : "Ext^i(k, A) is nonzero below d";
  }
  return rep;
}

template <ExactField S>
ChiProbeReport chi_probe(Algebra<S>& A, const GradedModulePresentation<S>& Mp, int j_max, int N) {
  const auto F = resolve(A, trivial_module(A, Mp.side), j_max + 1, N);
  int L = 0;
  for (const auto& level : F.shifts)
    for (int l : level) L = std::max(L, l);
  const int lowest = Mp.shifts.empty() ? 0 : *std::min_element(Mp.shifts.begin(), Mp.shifts.end());
  ChiProbeReport rep;
  rep.j_max = j_max;
  rep.d_lo = lowest - L;
  rep.d_hi = N - L;
  GradedModule<S> M(A, Mp);
  const int width = rep.d_hi - rep.d_lo + 1;
  const int top_start = rep.d_hi - std::max(width / 4, 1) + 1;
  rep.right_bounded = true;
  for (int j = 0; j <= j_max; ++j) {
    std::vector<long> row;
    for (int d = rep.d_lo; d <= rep.d_hi; ++d) {
      const long v = ext_dim(F, M, j, d);
      if (v != 0 && d >= top_start) rep.right_bounded = false;
      row.push_back(v);
    }
    rep.dims.push_back(std::move(row));
  }
  return rep;
}

// ------------------------------------------------------- Proj cohomology

template <ExactField S>
ProjCohomology<S>::ProjCohomology(Algebra<S>& A, GradedModulePresentation<S> M) : A_(A), M_(A, std::move(M)) {}

template <ExactField S>
int ProjCohomology<S>::required_cutoff(int j, int d, int n_max) const {
  return n_max + j + 1 + A_.max_weight() + std::max(d, 0);
}

template <ExactField S>
long ProjCohomology<S>::value(int j, int d, int n) {
  const int top = n + j + 1 + A_.max_weight();
  if (j == 0) {
    auto it = ideals_.find(n);
    if (it == ideals_.end()) it = ideals_.emplace(n, truncation_ideal(A_, n, top, M_.presentation().side)).first;
    return graded_hom_dim(A_, it->second, M_, d);
  }
  auto it = quotients_.find(n);
  if (it == quotients_.end() || it->second.length_computed() < j + 2 || it->second.top_degree < top) {
    auto F = resolve(A_, truncation_quotient(A_, n, M_.presentation().side), j + 2, top);
    it = quotients_.insert_or_assign(n, std::move(F)).first;
  }
  return ext_dim(it->second, M_, j + 1, d);
}

template <ExactField S>
CohomologyCell ProjCohomology<S>::cell(int j, int d, int n_max) {
  if (j < 0) throw DomainError("cohomological degree must be nonnegative");
  if (n_max < 1) throw DomainError("n_max must be positive");
  const int needed = required_cutoff(j, d, n_max);
  if (needed > A_.cutoff()) throw CutoffExceeded(needed, A_.cutoff());
  CohomologyCell c;
  c.j = j;
  c.d = d;
  c.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) c.values.push_back(value(j, d, n));
  stabilize(c);
  return c;
}

template <ExactField S>
CdReport cd_estimate(Algebra<S>& A, int j_max, int d_lo, int d_hi, int n_max) {
  ProjCohomology<S> pc(A, free_module<S>({0}));
  CdReport rep;
  rep.j_max = j_max;
  rep.d_lo = d_lo;
  rep.d_hi = d_hi;
  for (int j = 0; j <= j_max; ++j) {
    for (int d = d_lo; d <= d_hi; ++d) {
      auto c = pc.cell(j, d, n_max);
      if (!c.stabilized) {
        throw DomainError("H^" + std::to_string(j) + "(" + std::to_string(d) + ") did not stabilise by n = " +
                          std::to_string(n_max));
      }
      if (*c.stabilized != 0) rep.cd = std::max(rep.cd, j);
      rep.cells.push_back(std::move(c));
    }
  }
  return rep;
}

template <ExactField S>
TruncationSequenceDims truncation_sequence(Algebra<S>& A, const GradedModulePresentation<S>& Mp, int n, int t) {
  GradedModule<S> M(A, Mp);
  const int top = n + 2 + A.max_weight();
  TruncationSequenceDims out;
  out.hom_quotient = graded_hom_dim(A, truncation_quotient(A, n, Mp.side), M, t);
  out.module = M.dim(t);
  out.hom_ideal = graded_hom_dim(A, truncation_ideal(A, n, top, Mp.side), M, t);
  const auto F = resolve(A, truncation_quotient(A, n, Mp.side), 2, top);
  out.ext1_quotient = ext_dim(F, M, 1, t);
  return out;
}

}  // namespace ncproj
