#pragma once

// Invariants of Artinian algebras and finite-length modules: graded duals and
// the canonical module, socles, type and level, minimal presentations over
// the polynomial ring, Lefschetz rank checks and unimodality.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "gor/algebra.hpp"
#include "gor/error.hpp"
#include "gor/grading.hpp"
#include "gor/polynomial.hpp"
#include "gor/sparse.hpp"

namespace gor {

/// Graded dual Hom_k(M, k): degrees and multidegrees are negated and the
/// variable actions transposed.
template <class F>
GradedModule<F> dual_module(const GradedModule<F>& M) {
  std::vector<int> degs;
  std::vector<MultiDegree> md;
  std::vector<std::uint32_t> to_dual(M.dim());
  for (int d = M.top(); d >= M.low; --d)
    for (std::uint32_t b = M.begin_at(d); b < M.end_at(d); ++b) {
      to_dual[b] = static_cast<std::uint32_t>(degs.size());
      degs.push_back(-d);
      md.push_back(md_neg(M.md[b]));
    }
  GradedModule<F> D = make_module(M.field, M.var_names, M.var_md, degs, md);
  for (std::size_t v = 0; v < M.nvars(); ++v) {
    for (std::uint32_t b = 0; b < M.dim(); ++b)
      for (const auto& [c, x] : M.action[v][b]) D.action[v][to_dual[c]].emplace_back(to_dual[b], x);
    for (auto& col : D.action[v]) std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return D;
}

/// omega_R realized as the graded dual of R; it lives in degrees -top..0.
template <class F>
GradedModule<F> canonical_module(const ArtinianAlgebra<F>& R) {
  return dual_module(R.as_module());
}

struct GeneratorSet {
  std::vector<std::uint32_t> elements;  // basis indices of the chosen generators
  std::vector<int> degrees;
};

/// Minimal homogeneous generators: in each degree, the unit vectors completing
/// the image of the lower degrees, chosen in basis order.
template <class F>
GeneratorSet minimal_generators(const GradedModule<F>& M) {
  GeneratorSet out;
  for (int d = M.low; d <= M.top(); ++d) {
    std::uint32_t lo = M.begin_at(d), hi = M.end_at(d);
    if (lo == hi) continue;
    Echelon<F> ech(M.field, M.dim());
    for (std::size_t v = 0; v < M.nvars(); ++v)
      for (std::uint32_t b = M.begin_at(d - 1); b < M.end_at(d - 1) && d > M.low; ++b) {
        ech.insert(M.action[v][b]);
        if (ech.rank() == hi - lo) break;
      }
    for (std::uint32_t b = lo; b < hi; ++b)
      if (!ech.is_pivot(b)) {
        out.elements.push_back(b);
        out.degrees.push_back(d);
      }
  }
  return out;
}

/// Basis of {r : x_i r = 0 for all i}, in global coordinates.
template <class F>
std::vector<SparseVec<F>> socle(const GradedModule<F>& M) {
  std::vector<SparseVec<F>> out;
  const std::size_t n = M.nvars(), dim = M.dim();
  for (int d = M.low; d <= M.top(); ++d) {
    std::uint32_t lo = M.begin_at(d), hi = M.end_at(d);
    std::vector<SparseVec<F>> cols;
    for (std::uint32_t b = lo; b < hi; ++b) {
      SparseVec<F> col;
      for (std::size_t v = 0; v < n; ++v)
        for (const auto& [c, x] : M.action[v][b]) col.emplace_back(static_cast<std::uint32_t>(v * dim + c), x);
      cols.push_back(std::move(col));
    }
    for (auto& k : kernel(M.field, n * dim, cols)) {
      for (auto& [c, x] : k) c += lo;
      out.push_back(std::move(k));
    }
  }
  return out;
}

template <class F>
std::vector<SparseVec<F>> socle(const ArtinianAlgebra<F>& R) {
  return socle(R.as_module());
}

struct TypeLevel {
  std::size_t type = 0;
  bool level = false;
  std::vector<int> generator_degrees;  // of omega_R
};

template <class F>
TypeLevel type_and_level(const ArtinianAlgebra<F>& R) {
  auto gens = minimal_generators(canonical_module(R));
  TypeLevel t;
  t.type = gens.elements.size();
  t.generator_degrees = gens.degrees;
  t.level = std::adjacent_find(gens.degrees.begin(), gens.degrees.end(), std::not_equal_to<>()) == gens.degrees.end();
  return t;
}

/// Minimal generators and minimal first syzygies of a module over the
/// polynomial ring on its variables. relations[r][g] is the coefficient of
/// generator g in relation r.
template <class F>
struct Presentation {
  RingPtr<F> ring;
  GeneratorSet generators;
  std::vector<int> relation_degrees;
  std::vector<std::vector<Polynomial<F>>> relations;
  int verified_through = 0;  // cokernel Hilbert function checked up to this degree

  bool linear() const {
    for (std::size_t r = 0; r < relations.size(); ++r)
      for (std::size_t g = 0; g < relations[r].size(); ++g)
        if (!relations[r][g].is_zero() && relations[r][g].degree() != 1) return false;
    return true;
  }
  /// Every relation sits exactly one degree above every generator.
  bool linearly_presented_in_one_degree() const {
    if (generators.degrees.empty()) return true;
    int g0 = generators.degrees.front();
    for (int d : generators.degrees)
      if (d != g0) return false;
    for (int d : relation_degrees)
      if (d != g0 + 1) return false;
    return true;
  }
};

namespace detail {

/// Basis of the free module F_0 = sum S(-deg g_k) in one degree: pairs
/// (generator, monomial), bucketed by multidegree.
struct FreeDegree {
  std::vector<std::pair<std::uint32_t, Monomial>> pairs;
  std::vector<MultiDegree> md;
  std::unordered_map<std::uint64_t, std::uint32_t> index;  // hash(k, monomial) -> position
  std::map<MultiDegree, std::vector<std::uint32_t>> blocks;

  static std::uint64_t key(std::uint32_t k, const Monomial& s) { return s.hash() * 1000003ull + k; }
  std::uint32_t at(std::uint32_t k, const Monomial& s) const { return index.at(key(k, s)); }
};

template <class F>
FreeDegree free_degree(const GradedModule<F>& M, const GeneratorSet& gens, const RingPtr<F>& ring, int j) {
  FreeDegree fd;
  Grading gr;
  for (std::size_t c = 0; c < M.grading_rank(); ++c) {
    std::vector<int> w;
    for (const auto& v : M.var_md) w.push_back(v[c]);
    gr.weights.push_back(w);
  }
  for (std::uint32_t k = 0; k < gens.elements.size(); ++k) {
    int e = j - gens.degrees[k];
    if (e < 0) continue;
    for (const auto& s : ring->monomials_of_degree(e)) {
      auto pos = static_cast<std::uint32_t>(fd.pairs.size());
      if (!fd.index.emplace(FreeDegree::key(k, s), pos).second) throw VerificationFailure("monomial hash collision");
      fd.pairs.emplace_back(k, s);
      MultiDegree md = md_add(M.md[gens.elements[k]], gr.degree(s));
      fd.blocks[md].push_back(pos);
      fd.md.push_back(std::move(md));
    }
  }
  return fd;
}

}  // namespace detail

namespace detail {

inline void sort_vec_by_index(auto& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

/// Cokernel of the relations has the Hilbert function of M in degrees
/// first..top+1; past top + 1 it then vanishes because the cokernel is
/// generated in degrees <= top.
template <class F>
bool cokernel_matches(const GradedModule<F>& M, const Presentation<F>& P, int first) {
  const F& K = M.field;
  for (int j = first; j <= M.top() + 1; ++j) {
    FreeDegree cur = free_degree(M, P.generators, P.ring, j);
    std::map<MultiDegree, std::vector<SparseVec<F>>> rows;
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
      int e = j - P.relation_degrees[r];
      if (e < 0) continue;
      for (const auto& s : P.ring->monomials_of_degree(e)) {
        SparseVec<F> w;
        for (std::size_t k = 0; k < P.relations[r].size(); ++k)
          for (const auto& [m, c] : P.relations[r][k].terms())
            w.emplace_back(cur.at(static_cast<std::uint32_t>(k), m * s), c);
        sort_vec_by_index(w);
        rows[cur.md[w.front().first]].push_back(std::move(w));
      }
    }
    std::size_t rk = 0;
    for (auto& [mu, vs] : rows) {
      const auto& cols = cur.blocks.at(mu);
      std::unordered_map<std::uint32_t, std::uint32_t> local;
      for (std::uint32_t q = 0; q < cols.size(); ++q) local.emplace(cols[q], q);
      for (auto& w : vs) {
        for (auto& [p, x] : w) p = local.at(p);
        sort_vec_by_index(w);
      }
      rk += rank(K, cols.size(), std::move(vs));
    }
    if (cur.pairs.size() - rk != M.dim_at(j)) return false;
  }
  return true;
}

}  // namespace detail

/// Minimal generators and relations of M over the polynomial ring. Minimal
/// relations of degree j correspond to H_1 of the Koszul complex on M in
/// degree j (so j <= top + 1). Each cycle sum e_v (x) m_v is turned into the
/// relation sum x_v L(m_v), where L lifts elements of M to the free module on
/// the generators. The cokernel is compared with M when the free module is
/// small enough (verify_limit basis elements); relations are always checked
/// to vanish on M.
template <class F>
Presentation<F> minimal_presentation(const GradedModule<F>& M, std::size_t verify_limit = 300'000) {
  const F& K = M.field;
  using Vec = SparseVec<F>;
  using Lift = std::vector<Polynomial<F>>;
  Presentation<F> P;
  P.ring = make_ring(K, M.var_names);
  P.generators = minimal_generators(M);
  const auto& gens = P.generators;
  const std::size_t n = M.nvars(), ng = gens.elements.size();
  if (ng == 0) return P;
  const int first = *std::min_element(gens.degrees.begin(), gens.degrees.end());
  P.verified_through = first - 1;

  // elements of each degree, bucketed by multidegree
  std::map<MultiDegree, std::vector<std::uint32_t>> by_md;
  for (std::uint32_t b = 0; b < M.dim(); ++b) by_md[M.md[b]].push_back(b);
  auto elements_at = [&](const MultiDegree& mu) -> const std::vector<std::uint32_t>* {
    auto it = by_md.find(mu);
    return it == by_md.end() ? nullptr : &it->second;
  };

  // H_1 representatives per degree, as (v, element, coefficient) lists
  struct Cycle {
    int degree;
    std::vector<std::tuple<std::size_t, std::uint32_t, typename F::Element>> terms;
  };
  std::vector<Cycle> cycles;
  for (int j = M.low + 1; j <= M.top() + 1; ++j) {
    // C_1 basis in degree j, by multidegree
    std::map<MultiDegree, std::vector<std::pair<std::size_t, std::uint32_t>>> c1;
    for (std::size_t v = 0; v < n; ++v)
      for (std::uint32_t b = M.begin_at(j - 1); b < M.end_at(j - 1); ++b) c1[md_add(M.md[b], M.var_md[v])].emplace_back(v, b);
    for (const auto& [mu, basis] : c1) {
      std::unordered_map<std::uint64_t, std::uint32_t> local;
      for (std::uint32_t q = 0; q < basis.size(); ++q) local.emplace(basis[q].first * M.dim() + basis[q].second, q);
      std::vector<Vec> images;
      for (const auto& [v, b] : basis) images.push_back(M.action[v][b]);
      auto Z = kernel(K, M.dim(), images);
      if (Z.empty()) continue;
      Echelon<F> ech(K, basis.size());
      // boundaries of e_v ^ e_w (x) c: e_w (x) x_v c - e_v (x) x_w c
      for (std::size_t v = 0; v < n && ech.rank() < Z.size(); ++v)
        for (std::size_t w = v + 1; w < n && ech.rank() < Z.size(); ++w) {
          MultiDegree need = md_sub(md_sub(mu, M.var_md[v]), M.var_md[w]);
          const auto* cs = elements_at(need);
          if (!cs) continue;
          for (auto c : *cs) {
            Vec bd;
            for (const auto& [b, x] : M.action[v][c]) bd.emplace_back(local.at(w * M.dim() + b), x);
            for (const auto& [b, x] : M.action[w][c]) bd.emplace_back(local.at(v * M.dim() + b), K.neg(x));
            detail::sort_vec_by_index(bd);
            ech.insert(bd);
            if (ech.rank() == Z.size()) break;
          }
        }
      for (const auto& z : Z)
        if (ech.insert(z)) {
          Cycle cy{j, {}};
          for (const auto& [q, x] : z) cy.terms.emplace_back(basis[q].first, basis[q].second, x);
          cycles.push_back(std::move(cy));
        }
    }
  }

  // lifts of elements in degrees first..(highest cycle degree - 1)
  int lift_top = first;
  for (const auto& c : cycles) lift_top = std::max(lift_top, c.degree - 1);
  std::vector<Lift> L(M.dim());
  std::vector<std::int64_t> gen_of(M.dim(), -1);
  for (std::uint32_t k = 0; k < ng; ++k) gen_of[gens.elements[k]] = k;
  const Polynomial<F> one = Polynomial<F>::monomial(P.ring, Monomial{}, K.one());
  for (int d = M.low; d <= lift_top; ++d) {
    std::map<MultiDegree, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t b = M.begin_at(d); b < M.end_at(d); ++b) blocks[M.md[b]].push_back(b);
    for (const auto& [mu, elems] : blocks) {
      std::unordered_map<std::uint32_t, std::uint32_t> local;
      for (std::uint32_t q = 0; q < elems.size(); ++q) local.emplace(elems[q], q);
      // candidates: generators of this block, then x_v c with c one degree lower
      std::vector<std::pair<std::int64_t, std::uint32_t>> cand;  // (variable or -1, element)
      Echelon<F> ech(K, elems.size(), elems.size() + 1);
      auto try_add = [&](std::int64_t v, std::uint32_t c, const Vec& img) {
        Vec lv;
        for (const auto& [b, x] : img) lv.emplace_back(local.at(b), x);
        detail::sort_vec_by_index(lv);
        if (ech.insert_tracked(lv, static_cast<std::uint32_t>(cand.size())).empty()) cand.emplace_back(v, c);
      };
      for (auto b : elems)
        if (gen_of[b] >= 0) try_add(-1, b, Vec{{b, K.one()}});
      for (std::size_t v = 0; v < n && ech.rank() < elems.size(); ++v) {
        const auto* cs = elements_at(md_sub(mu, M.var_md[v]));
        if (!cs) continue;
        for (auto c : *cs) {
          if (M.action[v][c].empty()) continue;
          try_add(static_cast<std::int64_t>(v), c, M.action[v][c]);
          if (ech.rank() == elems.size()) break;
        }
      }
      if (ech.rank() != elems.size()) throw VerificationFailure("minimal presentation: module not generated by its generators");
      for (auto b : elems) {
        auto comb = ech.express(Vec{{local.at(b), K.one()}});
        Lift l(ng, Polynomial<F>(P.ring));
        for (const auto& [id, x] : *comb) {
          const auto& [v, c] = cand[id];
          if (v < 0) {
            auto k = gen_of[c];
            l[k] = l[k].add_multiple(one, x, Monomial{});
          } else {
            auto xv = Monomial::variable(static_cast<std::size_t>(v));
            for (std::size_t k = 0; k < ng; ++k)
              if (!L[c][k].is_zero()) l[k] = l[k].add_multiple(L[c][k], x, xv);
          }
        }
        L[b] = std::move(l);
      }
    }
  }

  for (const auto& cy : cycles) {
    Lift rel(ng, Polynomial<F>(P.ring));
    for (const auto& [v, b, x] : cy.terms) {
      auto xv = Monomial::variable(v);
      for (std::size_t k = 0; k < ng; ++k)
        if (!L[b][k].is_zero()) rel[k] = rel[k].add_multiple(L[b][k], x, xv);
    }
    P.relations.push_back(std::move(rel));
    P.relation_degrees.push_back(cy.degree);
  }

  // every relation vanishes on M
  for (const auto& rel : P.relations) {
    DenseAccumulator<F> acc(K, M.dim());
    for (std::size_t k = 0; k < ng; ++k)
      for (const auto& [m, c] : rel[k].terms()) acc.add_scaled(M.act_monomial(m, gens.elements[k]), c);
    if (!acc.take().empty()) throw VerificationFailure("minimal presentation: a relation does not vanish");
  }

  std::size_t free_size = 0;
  for (int j = first; j <= M.top() + 1; ++j)
    for (std::size_t k = 0; k < ng; ++k)
      if (j >= gens.degrees[k])
        free_size += static_cast<std::size_t>(binomial(static_cast<long>(n) - 1 + j - gens.degrees[k], static_cast<long>(n) - 1).get_ui());
  if (free_size <= verify_limit) {
    if (!detail::cokernel_matches(M, P, first))
      throw VerificationFailure("minimal presentation: cokernel Hilbert function does not match the module");
    P.verified_through = M.top() + 1;
  }
  return P;
}

template <class F>
bool is_superlevel(const ArtinianAlgebra<F>& R) {
  auto P = minimal_presentation(canonical_module(R));
  return P.linearly_presented_in_one_degree();
}

struct Unimodality {
  bool unimodal = true;
  std::optional<std::size_t> violation;  // index of the first strict valley
};

/// A sequence is unimodal when it never rises again after a descent.
template <class T>
Unimodality unimodality(const std::vector<T>& h) {
  Unimodality u;
  bool descended = false;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] < h[i - 1]) descended = true;
    else if (h[i] > h[i - 1] && descended) {
      u.unimodal = false;
      u.violation = i - 1;
      return u;
    }
  }
  return u;
}

enum class LefschetzMode { weak, strong };

struct LefschetzMap {
  int from = 0, power = 1;
  std::size_t rank = 0, expected = 0;
  bool full() const { return rank == expected; }
};

struct LefschetzTrial {
  std::vector<long long> coefficients;  // of the linear form, as integers
  std::vector<LefschetzMap> maps;
  bool passes = true;
};

struct LefschetzReport {
  LefschetzMode mode = LefschetzMode::weak;
  std::uint64_t seed = 0;
  std::vector<LefschetzTrial> trials;
  bool holds_for_some = false;  // probabilistic evidence
  bool wlp_impossible = false;  // certificate: non-unimodal Hilbert function
  std::optional<std::size_t> unimodality_violation;
};

template <class F>
LefschetzReport lefschetz_check(const ArtinianAlgebra<F>& R, LefschetzMode mode, int trials, std::uint64_t seed) {
  const F& K = R.field();
  LefschetzReport rep;
  rep.mode = mode;
  rep.seed = seed;
  auto h = R.hilbert();
  auto u = unimodality(h);
  rep.wlp_impossible = !u.unimodal;
  rep.unimodality_violation = u.violation;
  std::mt19937_64 master(seed);
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(master());
    LefschetzTrial tr;
    for (std::size_t v = 0; v < R.nvars(); ++v) {
      long long c;
      if (K.characteristic() == 0) c = std::uniform_int_distribution<long long>(1, 1000)(rng);
      else c = std::uniform_int_distribution<long long>(1, static_cast<long long>(K.characteristic()) - 1)(rng);
      tr.coefficients.push_back(c);
    }
    auto times_l = [&](const SparseVec<F>& x) {
      DenseAccumulator<F> acc(K, R.dim());
      for (std::size_t v = 0; v < R.nvars(); ++v) acc.add_scaled(R.act(v, x), K.from_int(tr.coefficients[v]));
      return acc.take();
    };
    const int top = R.top();
    const int maxpow = mode == LefschetzMode::weak ? 1 : top;
    for (int i = 0; i <= top; ++i) {
      std::vector<SparseVec<F>> powers;
      for (std::uint32_t b = R.offsets[i]; b < R.offsets[i + 1]; ++b) powers.push_back({{b, K.one()}});
      for (int j = 1; j <= maxpow && i + j <= top; ++j) {
        for (auto& p : powers) p = times_l(p);
        LefschetzMap m;
        m.from = i;
        m.power = j;
        m.expected = std::min(R.dim_at(i), R.dim_at(i + j));
        m.rank = rank(K, R.dim(), powers);
        if (!m.full()) tr.passes = false;
        tr.maps.push_back(m);
      }
    }
    rep.holds_for_some = rep.holds_for_some || tr.passes;
    rep.trials.push_back(std::move(tr));
  }
  return rep;
}

}  // namespace gor
