#pragma once

// Finite-dimensional graded objects: modules given by a graded basis and
// variable actions, and Artinian quotients k[x]/I with a monomial basis.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gor/error.hpp"
#include "gor/grading.hpp"
#include "gor/polynomial.hpp"
#include "gor/sparse.hpp"

namespace gor {

/// A finite-length graded module over k[x_1..x_n]. Basis elements are stored
/// by ascending degree; `offsets[d - low]` is the first index of degree d and
/// the last entry of `offsets` is the total dimension.
template <class F>
struct GradedModule {
  F field;
  std::vector<std::string> var_names;
  std::vector<MultiDegree> var_md;
  int low = 0;
  std::vector<std::uint32_t> offsets{0};
  std::vector<MultiDegree> md;
  std::vector<std::vector<SparseVec<F>>> action;  // action[var][element]

  std::size_t dim() const { return md.size(); }
  std::size_t nvars() const { return var_names.size(); }
  std::size_t grading_rank() const { return var_md.empty() ? 1 : var_md[0].size(); }
  int top() const { return low + static_cast<int>(offsets.size()) - 2; }

  std::size_t dim_at(int d) const {
    if (d < low || d > top()) return 0;
    return offsets[d - low + 1] - offsets[d - low];
  }
  std::uint32_t begin_at(int d) const { return offsets[std::clamp(d, low, top() + 1) - low]; }
  std::uint32_t end_at(int d) const { return offsets[std::clamp(d + 1, low, top() + 1) - low]; }

  int degree_of(std::size_t idx) const {
    auto it = std::upper_bound(offsets.begin(), offsets.end(), static_cast<std::uint32_t>(idx));
    return low + static_cast<int>(it - offsets.begin()) - 1;
  }

  /// Dimensions from degree `low` to `top`.
  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> h;
    for (int d = low; d <= top(); ++d) h.push_back(dim_at(d));
    return h;
  }

  SparseVec<F> act(std::size_t var, const SparseVec<F>& v) const {
    DenseAccumulator<F> acc(field, dim());
    for (const auto& [b, c] : v) acc.add_scaled(action[var][b], c);
    return acc.take();
  }

  /// Image of the unit vector e_b under a monomial.
  SparseVec<F> act_monomial(const Monomial& m, std::size_t b) const {
    SparseVec<F> v{{static_cast<std::uint32_t>(b), field.one()}};
    for (std::size_t i = 0; i < nvars() && !v.empty(); ++i)
      for (int e = 0; e < m[i] && !v.empty(); ++e) v = act(i, v);
    return v;
  }

  /// M(a): the degree-d piece of the result is M_{a+d}.
  GradedModule shifted(int a) const {
    GradedModule r = *this;
    r.low = low - a;
    for (auto& d : r.md) d[0] -= a;
    return r;
  }

  /// Checks degree bookkeeping and that the variable actions commute.
  void validate() const {
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (action[v].size() != dim()) throw VerificationFailure("action table has wrong size");
      for (std::size_t b = 0; b < dim(); ++b)
        for (const auto& [c, x] : action[v][b]) {
          if (md_add(md[b], var_md[v]) != md[c]) throw VerificationFailure("action breaks the grading");
        }
    }
    for (std::size_t i = 0; i < nvars(); ++i)
      for (std::size_t j = i + 1; j < nvars(); ++j)
        for (std::size_t b = 0; b < dim(); ++b) {
          SparseVec<F> u{{static_cast<std::uint32_t>(b), field.one()}};
          auto a1 = act(i, act(j, u));
          auto a2 = act(j, act(i, u));
          if (a1.size() != a2.size()) throw VerificationFailure("variable actions do not commute");
          for (std::size_t k = 0; k < a1.size(); ++k)
            if (a1[k].first != a2[k].first || !field.equal(a1[k].second, a2[k].second))
              throw VerificationFailure("variable actions do not commute");
        }
  }
};

/// Builds a module skeleton from per-element degrees (must be ascending).
template <class F>
GradedModule<F> make_module(F field, std::vector<std::string> names, std::vector<MultiDegree> var_md,
                            const std::vector<int>& degrees, std::vector<MultiDegree> md) {
  GradedModule<F> M{std::move(field), std::move(names), std::move(var_md)};
  M.md = std::move(md);
  if (degrees.empty()) {
    M.low = 0;
    M.offsets = {0};
  } else {
    M.low = degrees.front();
    int top = degrees.back();
    M.offsets.assign(static_cast<std::size_t>(top - M.low + 2), 0);
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      if (k && degrees[k] < degrees[k - 1]) throw BadParameter("module basis must be sorted by degree");
      M.offsets[degrees[k] - M.low + 1] = static_cast<std::uint32_t>(k + 1);
    }
    for (std::size_t d = 1; d < M.offsets.size(); ++d) M.offsets[d] = std::max(M.offsets[d], M.offsets[d - 1]);
  }
  M.action.assign(M.var_names.size(), std::vector<SparseVec<F>>(M.md.size()));
  return M;
}

/// Artinian graded quotient S/I with a standard-monomial basis.
template <class F>
struct ArtinianAlgebra {
  RingPtr<F> ring;
  Grading grading;
  std::vector<Monomial> basis;         // by degree, ascending ring order inside a degree
  std::vector<std::uint32_t> offsets;  // offsets[d] = first index of degree d; back() = dim
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  std::vector<std::vector<SparseVec<F>>> mult;  // mult[var][b] = x_var * b
  std::vector<MultiDegree> md;

  const F& field() const { return ring->field(); }
  std::size_t nvars() const { return ring->nvars(); }
  std::size_t dim() const { return basis.size(); }
  int top() const { return static_cast<int>(offsets.size()) - 2; }
  std::size_t dim_at(int d) const {
    if (d < 0 || d > top()) return 0;
    return offsets[d + 1] - offsets[d];
  }
  int degree_of(std::size_t b) const { return basis[b].degree(); }

  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> h;
    for (int d = 0; d <= top(); ++d) h.push_back(dim_at(d));
    return h;
  }

  SparseVec<F> act(std::size_t var, const SparseVec<F>& v) const {
    DenseAccumulator<F> acc(field(), dim());
    for (const auto& [b, c] : v) acc.add_scaled(mult[var][b], c);
    return acc.take();
  }

  /// Coordinates of a monomial of S in the basis.
  SparseVec<F> monomial_element(const Monomial& m) const {
    if (m.degree() > top()) return {};
    if (auto it = index.find(m); it != index.end()) return {{it->second, field().one()}};
    SparseVec<F> v{{0u, field().one()}};
    for (std::size_t i = 0; i < nvars() && !v.empty(); ++i)
      for (int e = 0; e < m[i] && !v.empty(); ++e) v = act(i, v);
    return v;
  }

  /// Coordinates of the class of a polynomial.
  SparseVec<F> element(const Polynomial<F>& f) const {
    DenseAccumulator<F> acc(field(), dim());
    for (const auto& [m, c] : f.terms()) acc.add_scaled(monomial_element(m), c);
    return acc.take();
  }

  /// Product of basis elements b1 * b2.
  SparseVec<F> basis_product(std::size_t b1, std::size_t b2) const {
    SparseVec<F> v{{static_cast<std::uint32_t>(b2), field().one()}};
    const Monomial& m = basis[b1];
    for (std::size_t i = 0; i < nvars() && !v.empty(); ++i)
      for (int e = 0; e < m[i] && !v.empty(); ++e) v = act(i, v);
    return v;
  }

  SparseVec<F> multiply(const SparseVec<F>& a, const SparseVec<F>& b) const {
    DenseAccumulator<F> acc(field(), dim());
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) acc.add_scaled(basis_product(i, j), field().mul(x, y));
    return acc.take();
  }

  /// Replaces the multigrading by a coarser one under which the ideal stays homogeneous.
  void regrade(Grading g) {
    grading = std::move(g);
    for (std::size_t b = 0; b < dim(); ++b) md[b] = grading.degree(basis[b]);
    for (std::size_t v = 0; v < nvars(); ++v)
      for (std::size_t b = 0; b < dim(); ++b)
        for (const auto& [c, x] : mult[v][b])
          if (md_add(md[b], grading.variable(v)) != md[c]) throw BadParameter("grading is not compatible with the algebra");
  }

  std::string basis_label(std::size_t b) const { return ring->monomial_string(basis[b]); }

  /// The algebra as a module over its own polynomial ring.
  GradedModule<F> as_module() const {
    std::vector<int> degs;
    for (const auto& m : basis) degs.push_back(m.degree());
    std::vector<MultiDegree> vmd;
    for (std::size_t i = 0; i < nvars(); ++i) vmd.push_back(grading.variable(i));
    GradedModule<F> M = make_module(field(), ring->names(), vmd, degs, md);
    M.action = mult;
    return M;
  }
};

}  // namespace gor
