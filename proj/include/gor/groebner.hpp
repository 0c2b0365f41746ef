#pragma once

// Buchberger's algorithm for homogeneous ideals, normal forms, standard
// monomial bases of Artinian quotients, and colon ideals C : g.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gor/algebra.hpp"
#include "gor/error.hpp"
#include "gor/grading.hpp"
#include "gor/polynomial.hpp"
#include "gor/sparse.hpp"

namespace gor {

inline constexpr int kStaircaseDegreeBound = 64;

template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elems) : ring_(std::move(ring)), elems_(std::move(elems)) {
    masks_.reserve(elems_.size());
    for (const auto& g : elems_) masks_.push_back(g.leading_monomial().support());
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  /// Index of the first element whose leading monomial divides m, or -1.
  int find_reducer(const Monomial& m) const {
    std::uint32_t s = m.support();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if ((masks_[i] & ~s) != 0) continue;
      if (elems_[i].leading_monomial().divides(m)) return static_cast<int>(i);
    }
    return -1;
  }

  bool is_standard(const Monomial& m) const { return find_reducer(m) < 0; }

  /// Elements grouped by degree.
  std::map<int, std::vector<std::size_t>> by_degree() const {
    std::map<int, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < elems_.size(); ++i) out[elems_[i].degree()].push_back(i);
    return out;
  }

  /// Standard monomials of degree d, ascending in the ring order.
  std::vector<Monomial> standard_monomials(int d) const {
    std::vector<Monomial> out;
    for (const auto& m : ring_->monomials_of_degree(d))
      if (is_standard(m)) out.push_back(m);
    return out;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> elems_;
  std::vector<std::uint32_t> masks_;
};

namespace detail {

template <class F>
struct PairQueueEntry {
  std::size_t i, j;
  Monomial lcm;
};

/// Working state of a homogeneous Buchberger run.
template <class F>
class Buchberger {
 public:
  explicit Buchberger(RingPtr<F> ring) : ring_(std::move(ring)) {}

  const std::vector<Polynomial<F>>& basis() const { return g_; }

  /// Top-reduces f by the current basis.
  Polynomial<F> top_reduce(Polynomial<F> f) const {
    const auto& K = ring_->field();
    while (!f.is_zero()) {
      int r = find(f.leading_monomial());
      if (r < 0) break;
      const auto& g = g_[r];
      Monomial t = f.leading_monomial() / g.leading_monomial();
      f = f.add_multiple(g, K.neg(f.leading_coefficient()), t);
    }
    return f;
  }

  Polynomial<F> full_reduce(Polynomial<F> f) const {
    const auto& K = ring_->field();
    std::vector<typename Polynomial<F>::Term> out;
    while (!f.is_zero()) {
      int r = find(f.leading_monomial());
      if (r < 0) {
        out.push_back(f.terms().front());
        f.drop_leading();
        continue;
      }
      const auto& g = g_[r];
      Monomial t = f.leading_monomial() / g.leading_monomial();
      f = f.add_multiple(g, K.neg(f.leading_coefficient()), t);
    }
    return Polynomial<F>::from_terms(ring_, std::move(out));
  }

  int find(const Monomial& m) const {
    std::uint32_t s = m.support();
    for (std::size_t i = 0; i < g_.size(); ++i) {
      if (!alive_[i] || (masks_[i] & ~s) != 0) continue;
      if (g_[i].leading_monomial().divides(m)) return static_cast<int>(i);
    }
    return -1;
  }

  /// Adds a top-reduced nonzero element and updates the pair set
  /// (Gebauer-Moeller criteria).
  void add(Polynomial<F> h) {
    h = h.monic();
    const std::size_t hn = g_.size();
    const Monomial& lh = h.leading_monomial();

    // Candidate new pairs (h, g) for live g.
    std::vector<std::pair<std::size_t, Monomial>> cand;
    for (std::size_t i = 0; i < hn; ++i)
      if (alive_[i]) cand.emplace_back(i, lh.lcm(g_[i].leading_monomial()));

    // Chain criterion among the new pairs.
    std::vector<char> keep(cand.size(), 1);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const auto& la = cand[a].second;
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        const auto& lb = cand[b].second;
        if (lb.divides(la) && (lb != la || b < a)) keep[a] = 0;
      }
    }
    // Old pairs made redundant by h.
    std::vector<PairQueueEntry<F>> old;
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && lh.lcm(g_[p.i].leading_monomial()) != p.lcm &&
          lh.lcm(g_[p.j].leading_monomial()) != p.lcm)
        continue;
      old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    // Product criterion drops coprime pairs.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (lh.coprime(g_[cand[a].first].leading_monomial())) continue;
      pairs_.push_back({cand[a].first, hn, cand[a].second});
    }

    masks_.push_back(lh.support());
    alive_.push_back(1);
    g_.push_back(std::move(h));
  }

  /// Removes and returns the pairs whose lcm has degree d.
  std::vector<PairQueueEntry<F>> take_pairs(int d) {
    std::vector<PairQueueEntry<F>> out, rest;
    for (auto& p : pairs_) (p.lcm.degree() == d ? out : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    return out;
  }

  bool has_pairs() const { return !pairs_.empty(); }
  int min_pair_degree() const {
    int d = 1 << 30;
    for (const auto& p : pairs_) d = std::min(d, p.lcm.degree());
    return d;
  }

  Polynomial<F> spoly(const PairQueueEntry<F>& p) const {
    const auto& K = ring_->field();
    const auto& a = g_[p.i];
    const auto& b = g_[p.j];
    Polynomial<F> s = a.times_monomial(p.lcm / a.leading_monomial());
    return s.add_multiple(b, K.neg(K.one()), p.lcm / b.leading_monomial());
  }

  void clear_pairs() { pairs_.clear(); }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> g_;
  std::vector<std::uint32_t> masks_;
  std::vector<char> alive_;
  std::vector<PairQueueEntry<F>> pairs_;
};

template <class F>
bool every_variable_has_pure_power(const std::vector<Polynomial<F>>& g, std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& p : g) {
      const Monomial& m = p.leading_monomial();
      if (m.degree() > 0 && m[v] == m.degree()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Interreduces a Groebner basis into the reduced one, sorted by leading monomial.
template <class F>
std::vector<Polynomial<F>> interreduce(const RingPtr<F>& ring, std::vector<Polynomial<F>> g) {
  // drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  std::sort(minimal.begin(), minimal.end(), [&ring](const Polynomial<F>& a, const Polynomial<F>& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  // Tail reduction against all other elements; the leading terms stay fixed.
  std::vector<Polynomial<F>> out;
  out.reserve(minimal.size());
  GroebnerBasis<F> lead(ring, minimal);
  const auto& K = ring->field();
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Polynomial<F> f = minimal[i];
    std::vector<typename Polynomial<F>::Term> terms{f.terms().front()};
    Polynomial<F> tail = f;
    tail.drop_leading();
    while (!tail.is_zero()) {
      const Monomial& m = tail.leading_monomial();
      int r = lead.find_reducer(m);
      if (r < 0) {
        terms.push_back(tail.terms().front());
        tail.drop_leading();
        continue;
      }
      tail = tail.add_multiple(minimal[r], K.neg(tail.leading_coefficient()), m / minimal[r].leading_monomial());
    }
    out.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace detail

struct BuchbergerOptions {
  /// Stop as soon as every monomial of some degree lies in the leading-term
  /// ideal; the basis is then complete.
  bool stop_when_artinian = true;
  int max_degree = kStaircaseDegreeBound;
};

/// Reduced Groebner basis of a homogeneous ideal, computed degree by degree.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& I, const BuchbergerOptions& opt = {}) {
  const auto& ring = I.ring;
  std::map<int, std::vector<Polynomial<F>>> gens;
  for (const auto& g : I.generators)
    if (!g.is_zero()) gens[g.degree()].push_back(g);

  if (gens.count(0)) return GroebnerBasis<F>(ring, {Polynomial<F>::monomial(ring, Monomial{}, ring->field().one())});

  detail::Buchberger<F> B(ring);
  std::vector<Monomial> prev_std{Monomial{}};  // standard monomials of the previous degree
  bool artinian_stop = false;
  for (int d = 1; !artinian_stop; ++d) {
    bool work_left = B.has_pairs() || gens.upper_bound(d - 1) != gens.end();
    if (!work_left) break;
    if (d > opt.max_degree) throw NotArtinian("Groebner basis computation exceeded degree " + std::to_string(opt.max_degree));

    std::vector<Polynomial<F>> todo;
    if (auto it = gens.find(d); it != gens.end()) todo = it->second;
    for (const auto& p : B.take_pairs(d)) todo.push_back(B.spoly(p));
    for (auto& f : todo) {
      Polynomial<F> h = B.top_reduce(std::move(f));
      if (!h.is_zero()) B.add(B.full_reduce(std::move(h)));
    }

    if (opt.stop_when_artinian) {
      // Standard monomials of degree d are multiples of those of degree d-1.
      std::vector<Monomial> cur;
      std::unordered_map<Monomial, char, MonomialHash> seen;
      for (const auto& m : prev_std)
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
          Monomial x = m * Monomial::variable(v);
          if (seen.emplace(x, 1).second && B.find(x) < 0) cur.push_back(x);
        }
      prev_std = std::move(cur);
      if (prev_std.empty()) artinian_stop = true;
    }
  }
  return GroebnerBasis<F>(ring, detail::interreduce(ring, B.basis()));
}

/// Full normal form of f with respect to G.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  if (f.is_zero()) return f;
  if (f.ring() != G.ring() && !(*f.ring() == *G.ring())) throw RingMismatch();
  const auto& ring = G.ring();
  const auto& K = ring->field();
  std::vector<typename Polynomial<F>::Term> out;
  Polynomial<F> r = f;
  while (!r.is_zero()) {
    const Monomial& m = r.leading_monomial();
    int i = G.find_reducer(m);
    if (i < 0) {
      out.push_back(r.terms().front());
      r.drop_leading();
      continue;
    }
    const auto& g = G.elements()[i];
    r = r.add_multiple(g, K.neg(r.leading_coefficient()), m / g.leading_monomial());
  }
  return Polynomial<F>::from_terms(ring, std::move(out));
}

/// Checks that every S-polynomial reduces to zero.
template <class F>
bool verify_groebner(const GroebnerBasis<F>& G) {
  const auto& el = G.elements();
  const auto& K = G.ring()->field();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      const Monomial& a = el[i].leading_monomial();
      const Monomial& b = el[j].leading_monomial();
      if (a.coprime(b)) continue;
      Monomial l = a.lcm(b);
      Polynomial<F> s = el[i].times_monomial(l / a).add_multiple(el[j], K.neg(K.one()), l / b);
      if (!normal_form(s, G).is_zero()) return false;
    }
  return true;
}

/// Standard monomial basis and multiplication tables of S/I.
template <class F>
ArtinianAlgebra<F> build_quotient(const GroebnerBasis<F>& G) {
  const auto& ring = G.ring();
  const std::size_t n = ring->nvars();
  for (const auto& g : G.elements())
    if (g.degree() == 0) throw BadParameter("the ideal is the whole ring");
  if (!detail::every_variable_has_pure_power(G.elements(), n))
    throw NotArtinian("the quotient is not Artinian: some variable has no pure power among the leading terms");

  ArtinianAlgebra<F> A;
  A.ring = ring;
  A.grading = finest_grading<F>(n, G.elements());
  A.offsets = {0};
  std::vector<Monomial> layer{Monomial{}};
  for (int d = 0; !layer.empty(); ++d) {
    if (d > kStaircaseDegreeBound) throw NotArtinian("staircase exceeds degree " + std::to_string(kStaircaseDegreeBound));
    std::sort(layer.begin(), layer.end(), [&ring](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; });
    for (const auto& m : layer) {
      A.index.emplace(m, static_cast<std::uint32_t>(A.basis.size()));
      A.basis.push_back(m);
    }
    A.offsets.push_back(static_cast<std::uint32_t>(A.basis.size()));
    std::vector<Monomial> next;
    std::unordered_map<Monomial, char, MonomialHash> seen;
    for (const auto& m : layer)
      for (std::size_t v = 0; v < n; ++v) {
        Monomial x = m * Monomial::variable(v);
        if (seen.emplace(x, 1).second && G.is_standard(x)) next.push_back(x);
      }
    layer = std::move(next);
  }
  const int top = A.top();
  for (const auto& m : A.basis) A.md.push_back(A.grading.degree(m));

  // Memoized normal forms of monomials, as basis coordinates.
  const auto& K = ring->field();
  std::unordered_map<Monomial, SparseVec<F>, MonomialHash> memo;
  std::function<const SparseVec<F>&(const Monomial&)> nf = [&](const Monomial& m) -> const SparseVec<F>& {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    SparseVec<F> out;
    if (m.degree() <= top) {
      if (auto it = A.index.find(m); it != A.index.end()) {
        out.emplace_back(it->second, K.one());
      } else {
        int r = G.find_reducer(m);
        const auto& g = G.elements()[r];
        Monomial t = m / g.leading_monomial();
        DenseAccumulator<F> acc(K, A.dim());
        for (std::size_t k = 1; k < g.size(); ++k) {
          const auto& [gm, gc] = g.terms()[k];
          acc.add_scaled(nf(gm * t), K.neg(gc));
        }
        out = acc.take();
      }
    }
    return memo.emplace(m, std::move(out)).first->second;
  };

  A.mult.assign(n, std::vector<SparseVec<F>>(A.dim()));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < A.dim(); ++b) A.mult[v][b] = nf(A.basis[b] * Monomial::variable(v));
  return A;
}

template <class F>
ArtinianAlgebra<F> quotient_algebra(const Ideal<F>& I) {
  return build_quotient(buchberger(I));
}

/// Dimensions of (S/I)_d for d = 0..max_degree from ranks of the degree-d
/// pieces of the ideal (an oracle independent of Groebner bases).
template <class F>
std::vector<std::size_t> hilbert_by_linear_algebra(const Ideal<F>& I, int max_degree) {
  const auto& ring = I.ring;
  const auto& K = ring->field();
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto mons = ring->monomials_of_degree(d);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
    for (std::size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], static_cast<std::uint32_t>(k));
    std::vector<SparseVec<F>> rows;
    for (const auto& g : I.generators) {
      if (g.is_zero() || g.degree() > d) continue;
      for (const auto& t : ring->monomials_of_degree(d - g.degree())) {
        SparseVec<F> row;
        for (const auto& [m, c] : g.terms()) row.emplace_back(idx.at(m * t), c);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
    }
    out.push_back(mons.size() - rank(K, mons.size(), std::move(rows)));
  }
  return out;
}

/// Minimal generators of a homogeneous ideal, selected greedily by degree and
/// then by input order. Works in the degree-d pieces of S, so it is meant for
/// ideals in few variables.
template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I) {
  const auto& ring = I.ring;
  const auto& K = ring->field();
  std::map<int, std::vector<Polynomial<F>>> by_deg;
  for (const auto& g : I.generators)
    if (!g.is_zero()) by_deg[g.degree()].push_back(g);
  std::vector<Polynomial<F>> kept;
  for (const auto& [d, gs] : by_deg) {
    auto mons = ring->monomials_of_degree(d);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
    for (std::size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], static_cast<std::uint32_t>(k));
    auto vec = [&](const Polynomial<F>& p) {
      SparseVec<F> v;
      for (const auto& [m, c] : p.terms()) v.emplace_back(idx.at(m), c);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return v;
    };
    Echelon<F> ech(K, mons.size());
    for (const auto& g : kept)
      for (const auto& t : ring->monomials_of_degree(d - g.degree())) ech.insert(vec(g.times_monomial(t)));
    for (const auto& g : gs)
      if (ech.insert(vec(g))) kept.push_back(g);
  }
  return kept;
}

/// C : g for S/C Artinian, as C plus lifts of a basis of the kernel of
/// multiplication by g on S/C, minimalized.
template <class F>
Ideal<F> colon_by_element(const Ideal<F>& C, const Polynomial<F>& g) {
  const auto& ring = C.ring;
  if (!g.is_zero() && !g.is_homogeneous()) throw BadParameter("colon_by_element needs a homogeneous element");
  ArtinianAlgebra<F> Q = quotient_algebra(C);
  const auto& K = ring->field();
  SparseVec<F> ge = Q.element(g);
  std::vector<Polynomial<F>> gens = C.generators;
  for (int d = 0; d <= Q.top(); ++d) {
    std::vector<SparseVec<F>> cols;
    for (std::uint32_t b = Q.offsets[d]; b < Q.offsets[d + 1]; ++b) {
      SparseVec<F> img = Q.multiply(SparseVec<F>{{b, K.one()}}, ge);
      cols.push_back(std::move(img));
    }
    auto ker = kernel(K, Q.dim(), cols);
    for (const auto& k : ker) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (const auto& [c, x] : k) terms.emplace_back(Q.basis[Q.offsets[d] + c], x);
      gens.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
    }
  }
  // Degrees above the top of S/C are entirely in C already.
  return Ideal<F>(ring, minimal_generators(Ideal<F>(ring, gens)));
}

}  // namespace gor
