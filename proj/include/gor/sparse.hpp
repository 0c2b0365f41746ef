#pragma once

// Exact sparse linear algebra over a field policy: incremental echelon forms,
// rank, and kernels. Vectors are sorted (index, value) lists without zeros.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "gor/field.hpp"

namespace gor {

template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Element>>;

template <class F>
SparseVec<F> scaled(const F& field, const SparseVec<F>& v, const typename F::Element& c) {
  SparseVec<F> out;
  if (field.is_zero(c)) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, field.mul(x, c));
  return out;
}

/// Accumulates sparse vectors into a dense buffer and extracts the sorted result.
template <class F>
class DenseAccumulator {
 public:
  using E = typename F::Element;

  DenseAccumulator(const F& field, std::size_t dim) : field_(field), acc_(dim, field.zero()), touched_(dim, 0) {}

  void add(std::uint32_t i, const E& x) {
    if (!touched_[i]) {
      touched_[i] = 1;
      list_.push_back(i);
    }
    acc_[i] = field_.add(acc_[i], x);
  }
  void add_scaled(const SparseVec<F>& v, const E& c) {
    for (const auto& [i, x] : v) add(i, field_.mul(x, c));
  }
  SparseVec<F> take() {
    std::sort(list_.begin(), list_.end());
    SparseVec<F> out;
    for (auto i : list_) {
      if (!field_.is_zero(acc_[i])) out.emplace_back(i, acc_[i]);
      acc_[i] = field_.zero();
      touched_[i] = 0;
    }
    list_.clear();
    return out;
  }
  std::size_t dim() const { return acc_.size(); }

 private:
  const F& field_;
  std::vector<E> acc_;
  std::vector<char> touched_;
  std::vector<std::uint32_t> list_;
};

/// Row echelon form built one vector at a time. Each stored row has its
/// pivot (smallest index) normalized to one. With tracking enabled, every row
/// remembers the combination of inserted vectors it came from, so vectors
/// that reduce to zero yield kernel relations.
template <class F>
class Echelon {
 public:
  using E = typename F::Element;

  Echelon(const F& field, std::size_t dim, std::size_t track_dim = 0)
      : field_(field),
        dim_(dim),
        pivot_row_(dim, -1),
        acc_(dim, field.zero()),
        in_heap_(dim, 0),
        track_(track_dim > 0),
        comb_(field, track_dim > 0 ? track_dim : 1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t i) const { return pivot_row_[i] >= 0; }
  const std::vector<SparseVec<F>>& rows() const { return rows_; }

  SparseVec<F> reduce(const SparseVec<F>& v) { return reduce_impl(v, nullptr); }

  bool contains(const SparseVec<F>& v) { return reduce(v).empty(); }

  /// Inserts v; returns true when it was independent of the current rows.
  bool insert(const SparseVec<F>& v) {
    SparseVec<F> r = reduce_impl(v, nullptr);
    if (r.empty()) return false;
    add_row(std::move(r), {});
    return true;
  }

  /// Tracked insertion of vector number `id`. Returns the kernel relation
  /// (over inserted ids) when v is dependent, otherwise an empty vector.
  SparseVec<F> insert_tracked(const SparseVec<F>& v, std::uint32_t id) {
    comb_.add(id, field_.one());
    SparseVec<F> r = reduce_impl(v, &comb_);
    SparseVec<F> comb = comb_.take();
    if (r.empty()) return comb;
    add_row(std::move(r), std::move(comb));
    return {};
  }

  /// Coefficients c over tracked ids with v = sum c_id v_id; nullopt when v
  /// lies outside the span.
  std::optional<SparseVec<F>> express(const SparseVec<F>& v) {
    SparseVec<F> r = reduce_impl(v, &comb_);
    SparseVec<F> comb = comb_.take();
    if (!r.empty()) return std::nullopt;
    for (auto& [i, x] : comb) x = field_.neg(x);
    return comb;
  }

 private:
  void add_row(SparseVec<F> r, SparseVec<F> comb) {
    E inv = field_.inv(r.front().second);
    if (!field_.is_one(inv)) {
      for (auto& [i, x] : r) x = field_.mul(x, inv);
      for (auto& [i, x] : comb) x = field_.mul(x, inv);
    }
    pivot_row_[r.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    if (track_) combos_.push_back(std::move(comb));
  }

  SparseVec<F> reduce_impl(const SparseVec<F>& v, DenseAccumulator<F>* comb) {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    for (const auto& [i, x] : v) {
      acc_[i] = field_.add(acc_[i], x);
      if (!in_heap_[i]) {
        in_heap_[i] = 1;
        heap.push(i);
      }
    }
    SparseVec<F> out;
    while (!heap.empty()) {
      std::uint32_t i = heap.top();
      heap.pop();
      in_heap_[i] = 0;
      E a = acc_[i];
      acc_[i] = field_.zero();
      if (field_.is_zero(a)) continue;
      int r = pivot_row_[i];
      if (r < 0) {
        out.emplace_back(i, std::move(a));
        continue;
      }
      const auto& row = rows_[r];
      for (std::size_t k = 1; k < row.size(); ++k) {
        std::uint32_t j = row[k].first;
        acc_[j] = field_.sub_mul(acc_[j], a, row[k].second);
        if (!in_heap_[j]) {
          in_heap_[j] = 1;
          heap.push(j);
        }
      }
      if (comb) {
        for (const auto& [j, x] : combos_[r]) comb->add(j, field_.neg(field_.mul(a, x)));
      }
    }
    return out;
  }

  const F& field_;
  std::size_t dim_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec<F>> rows_;
  std::vector<SparseVec<F>> combos_;
  std::vector<E> acc_;
  std::vector<char> in_heap_;
  bool track_;
  DenseAccumulator<F> comb_;
};

namespace detail {

template <class F>
std::size_t dense_rank(const F& field, std::size_t dim, const std::vector<SparseVec<F>>& vecs) {
  using E = typename F::Element;
  const std::size_t m = vecs.size();
  std::vector<std::vector<E>> a(m, std::vector<E>(dim, field.zero()));
  for (std::size_t r = 0; r < m; ++r)
    for (const auto& [i, x] : vecs[r]) a[r][i] = x;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && field.is_zero(a[piv][c])) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    E inv = field.inv(a[rank][c]);
    for (std::size_t k = c; k < dim; ++k) a[rank][k] = field.mul(a[rank][k], inv);
    for (std::size_t r = rank + 1; r < m; ++r) {
      if (field.is_zero(a[r][c])) continue;
      E f = a[r][c];
      for (std::size_t k = c; k < dim; ++k)
        if (!field.is_zero(a[rank][k])) a[r][k] = field.sub_mul(a[r][k], f, a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank of the span of `vecs` inside a space of dimension `dim`.
/// Small problems use dense elimination; larger ones insert vectors sparsest
/// first into an echelon form and stop once the rank is saturated.
template <class F>
std::size_t rank(const F& field, std::size_t dim, std::vector<SparseVec<F>> vecs) {
  vecs.erase(std::remove_if(vecs.begin(), vecs.end(), [](const auto& v) { return v.empty(); }), vecs.end());
  if (vecs.empty() || dim == 0) return 0;
  if (dim < 500 && vecs.size() < 500) return detail::dense_rank(field, dim, vecs);
  std::stable_sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t cap = std::min(dim, vecs.size());
  Echelon<F> ech(field, dim);
  for (const auto& v : vecs) {
    ech.insert(v);
    if (ech.rank() == cap) break;
  }
  return ech.rank();
}

/// Basis of the kernel of the map whose i-th column is columns[i]
/// (columns live in a space of dimension `target_dim`). Kernel vectors are
/// indexed by column number; each has its last nonzero entry equal to one.
template <class F>
std::vector<SparseVec<F>> kernel(const F& field, std::size_t target_dim, const std::vector<SparseVec<F>>& columns) {
  std::vector<SparseVec<F>> out;
  if (columns.empty()) return out;
  Echelon<F> ech(field, target_dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseVec<F> rel = ech.insert_tracked(columns[c], static_cast<std::uint32_t>(c));
    if (!rel.empty()) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace gor
