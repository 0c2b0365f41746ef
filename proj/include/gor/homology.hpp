#pragma once

// Graded Betti numbers over the polynomial ring via Koszul homology, and
// minimal free resolutions of finite modules over Artinian algebras.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "gor/algebra.hpp"
#include "gor/artinian.hpp"
#include "gor/error.hpp"
#include "gor/sparse.hpp"

namespace gor {

/// Runs fn(k) for k in [0, count) on up to `jobs` threads.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next++;
      if (k >= count) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs && static_cast<std::size_t>(t) < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

struct BettiTable {
  std::size_t nvars = 0;
  int max_i = -1;  // homological degrees 0..max_i are exact
  std::map<std::pair<int, int>, std::size_t> beta;  // nonzero entries only

  bool complete() const { return max_i >= static_cast<int>(nvars); }

  std::size_t at(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
  }

  std::size_t total(int i) const {
    std::size_t s = 0;
    for (const auto& [ij, v] : beta)
      if (ij.first == i) s += v;
    return s;
  }

  bool operator==(const BettiTable& o) const { return nvars == o.nvars && max_i == o.max_i && beta == o.beta; }
};

/// max over nonzero beta(i, j) of j - i
inline int regularity(const BettiTable& B) {
  int r = 0;
  for (const auto& [ij, v] : B.beta) r = std::max(r, ij.second - ij.first);
  return r;
}

/// t_i = max{j : beta(i, j) != 0}; nullopt where row i vanishes.
inline std::vector<std::optional<int>> t_values(const BettiTable& B) {
  std::vector<std::optional<int>> t(static_cast<std::size_t>(std::max(B.max_i, 0) + 1));
  for (const auto& [ij, v] : B.beta) {
    if (ij.first > B.max_i) continue;
    auto& x = t[ij.first];
    x = x ? std::max(*x, ij.second) : ij.second;
  }
  return t;
}

/// Pairs (a, b), 1 <= a <= b, with t_a + t_b < t_{a+b}, within the given range.
inline std::vector<std::pair<int, int>> subadditivity_report(const std::vector<std::optional<int>>& t) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(t.size());
  for (int a = 1; a < n; ++a)
    for (int b = a; a + b < n; ++b)
      if (t[a] && t[b] && t[a + b] && *t[a] + *t[b] < *t[a + b]) out.emplace_back(a, b);
  return out;
}

inline std::vector<std::pair<int, int>> subadditivity_report(const std::vector<int>& t) {
  std::vector<std::optional<int>> o(t.begin(), t.end());
  return subadditivity_report(o);
}

/// beta(i, j) == beta(n - i, n + s - j) for all entries.
inline bool gorenstein_symmetry_check(const BettiTable& B, int s) {
  const int n = static_cast<int>(B.nvars);
  if (!B.complete() || B.at(n, n + s) != 1) return false;
  for (const auto& [ij, v] : B.beta)
    if (B.at(n - ij.first, n + s - ij.second) != v) return false;
  return true;
}

/// Checks sum_{i,j} (-1)^i beta(i,j) t^j == HS(t) (1-t)^n. `low` is the
/// lowest degree of the module whose Hilbert function is `h`.
inline bool euler_identity(const BettiTable& B, const std::vector<std::size_t>& h, int low = 0) {
  if (!B.complete()) return false;
  std::map<int, BigInt> lhs, rhs;
  for (const auto& [ij, v] : B.beta) lhs[ij.second] += (ij.first % 2 ? -1 : 1) * BigInt(static_cast<unsigned long>(v));
  const long n = static_cast<long>(B.nvars);
  for (std::size_t d = 0; d < h.size(); ++d)
    for (long k = 0; k <= n; ++k) rhs[low + static_cast<int>(d) + static_cast<int>(k)] += (k % 2 ? -1 : 1) * binomial(n, k) * BigInt(static_cast<unsigned long>(h[d]));
  auto strip = [](std::map<int, BigInt>& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  };
  strip(lhs);
  strip(rhs);
  return lhs == rhs;
}

struct KoszulOptions {
  int max_i = -1;  // compute rows 0..max_i only (-1: all)
  int jobs = 1;
  std::size_t max_chain_dim = 50'000'000;  // refuse larger Koszul complexes
};

/// Total dimension of the Koszul complex pieces K_0..K_imax of M.
template <class F>
std::size_t koszul_chain_dimension(const GradedModule<F>& M, int max_i) {
  std::size_t s = 0;
  for (int i = 0; i <= max_i; ++i) s += binomial(static_cast<long>(M.nvars()), i).get_ui() * M.dim();
  return s;
}

/// beta_{i,j} = dim Tor_i^S(M, k)_j from the homology of the Koszul complex
/// Lambda^i(k^n) (x) M, computed block by block per multidegree.
template <class F>
BettiTable betti_over_S(const GradedModule<F>& M, const KoszulOptions& opt = {}) {
  const int n = static_cast<int>(M.nvars());
  const int imax = opt.max_i < 0 ? n : std::min(opt.max_i, n);
  if (koszul_chain_dimension(M, std::min(imax + 1, n)) > opt.max_chain_dim)
    throw InfeasibleSize("Koszul complex too large: " + std::to_string(koszul_chain_dimension(M, std::min(imax + 1, n))) +
                         " chain basis elements exceed the threshold " + std::to_string(opt.max_chain_dim));
  const F& K = M.field;
  const std::uint64_t dim = M.dim();

  using Key = std::uint64_t;  // mask * dim + b
  struct Level {
    std::map<MultiDegree, std::vector<Key>> blocks;
    std::unordered_map<Key, std::uint32_t> local;  // position inside its block
    std::map<MultiDegree, std::size_t> rank_out;   // rank of d_i on each block
  };
  auto build_level = [&](int i) {
    Level L;
    std::vector<std::uint32_t> masks;
    std::function<void(int, int, std::uint32_t)> rec = [&](int start, int left, std::uint32_t mask) {
      if (left == 0) {
        masks.push_back(mask);
        return;
      }
      for (int k = start; k <= n - left; ++k) rec(k + 1, left - 1, mask | (1u << k));
    };
    rec(0, i, 0);
    for (auto mask : masks) {
      MultiDegree base(M.grading_rank(), 0);
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1u) base = md_add(base, M.var_md[k]);
      for (std::uint64_t b = 0; b < dim; ++b) {
        auto& blk = L.blocks[md_add(base, M.md[b])];
        Key key = mask * dim + b;
        L.local.emplace(key, static_cast<std::uint32_t>(blk.size()));
        blk.push_back(key);
      }
    }
    return L;
  };

  // rank of d_i : K_i -> K_{i-1} on every block of level i
  auto compute_ranks = [&](Level& cur, const Level& prev) {
    std::vector<const MultiDegree*> keys;
    std::vector<const std::vector<Key>*> cols;
    for (const auto& [mu, blk] : cur.blocks) {
      keys.push_back(&mu);
      cols.push_back(&blk);
    }
    std::vector<std::size_t> ranks(keys.size(), 0);
    parallel_for(keys.size(), opt.jobs, [&](std::size_t q) {
      auto it = prev.blocks.find(*keys[q]);
      if (it == prev.blocks.end()) return;
      const std::size_t target = it->second.size();
      std::vector<SparseVec<F>> vecs;
      vecs.reserve(cols[q]->size());
      for (Key key : *cols[q]) {
        std::uint32_t mask = static_cast<std::uint32_t>(key / dim);
        std::uint64_t b = key % dim;
        SparseVec<F> v;
        int sign_pos = 0;
        for (int k = 0; k < n; ++k) {
          if (!(mask >> k & 1u)) continue;
          std::uint32_t sub = mask & ~(1u << k);
          bool neg = sign_pos % 2 == 1;
          for (const auto& [c, x] : M.action[k][b])
            v.emplace_back(prev.local.at(sub * dim + c), neg ? K.neg(x) : x);
          ++sign_pos;
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
        // merge duplicates (cannot occur for distinct k, kept for safety)
        SparseVec<F> w;
        for (auto& e : v) {
          if (!w.empty() && w.back().first == e.first) {
            w.back().second = K.add(w.back().second, e.second);
            if (K.is_zero(w.back().second)) w.pop_back();
          } else {
            w.push_back(std::move(e));
          }
        }
        vecs.push_back(std::move(w));
      }
      ranks[q] = rank(K, target, std::move(vecs));
    });
    for (std::size_t q = 0; q < keys.size(); ++q) cur.rank_out[*keys[q]] = ranks[q];
  };

  BettiTable B;
  B.nvars = static_cast<std::size_t>(n);
  B.max_i = imax;
  Level prev = build_level(0);
  for (int i = 0; i <= imax; ++i) {
    // rank of d_{i+1} into level i
    std::map<MultiDegree, std::size_t> rank_next;
    Level next;
    if (i + 1 <= n) {
      next = build_level(i + 1);
      compute_ranks(next, prev);
      rank_next = next.rank_out;
    }
    for (const auto& [mu, blk] : prev.blocks) {
      std::size_t r_out = prev.rank_out.count(mu) ? prev.rank_out.at(mu) : 0;
      std::size_t r_in = rank_next.count(mu) ? rank_next.at(mu) : 0;
      if (blk.size() < r_out + r_in) throw VerificationFailure("Koszul homology: ranks exceed chain dimension");
      std::size_t h = blk.size() - r_out - r_in;
      if (h) B.beta[{i, mu[0]}] += h;
    }
    prev = std::move(next);
  }
  return B;
}

template <class F>
BettiTable betti_over_S(const ArtinianAlgebra<F>& R, const KoszulOptions& opt = {}) {
  return betti_over_S(R.as_module(), opt);
}

// ---------------------------------------------------------------------------
// Minimal resolutions over an Artinian algebra

struct TorProfile {
  int steps = 0;
  int degree_cap = 0;
  std::vector<std::map<int, std::size_t>> degrees;  // per step: internal degree -> generator count
  std::vector<bool> complete;                       // every degree of the step was searched
  bool cap_exceeded() const {
    return std::find(complete.begin(), complete.end(), false) != complete.end();
  }
  std::size_t count(int step) const {
    std::size_t s = 0;
    for (const auto& [d, c] : degrees[step]) s += c;
    return s;
  }
  std::size_t at(int step, int degree) const {
    auto it = degrees[step].find(degree);
    return it == degrees[step].end() ? 0 : it->second;
  }
  bool operator==(const TorProfile& o) const {
    return steps == o.steps && degree_cap == o.degree_cap && degrees == o.degrees && complete == o.complete;
  }
};

/// Largest s such that every generator at steps 1..s sits in degree
/// (step + lowest generator degree of step 0), with those steps fully searched.
inline int linear_steps(const TorProfile& P) {
  if (P.degrees.empty() || P.degrees[0].empty()) return P.steps;
  const int d0 = P.degrees[0].begin()->first;
  for (int s = 1; s <= P.steps; ++s) {
    for (const auto& [d, c] : P.degrees[s])
      if (c && d != d0 + s) return s - 1;
    if (!P.complete[s]) return s - 1;
  }
  return P.steps;
}

struct ResolveOptions {
  int steps = 1;
  std::optional<int> degree_cap;  // default: 2 * steps + top degree of the algebra
  int jobs = 1;
};

template <class F>
class Resolver {
 public:
  using E = typename F::Element;
  using Key = std::uint32_t;  // generator * dim(R) + basis element

  Resolver(const ArtinianAlgebra<F>& R, const GradedModule<F>& N) : R_(R), N_(N), K_(R.field()) {
    if (N.nvars() != R.nvars()) throw BadParameter("module and algebra have different numbers of variables");
    for (std::size_t v = 0; v < R.nvars(); ++v)
      if (N.var_md[v] != R.grading.variable(v)) throw BadParameter("module grading does not match the algebra grading");
    for (std::size_t b = 0; b < N.dim(); ++b)
      if (N.md[b][0] != N.degree_of(b)) throw BadParameter("module multidegree disagrees with its degree");
    const std::size_t d = R.dim();
    prod_.assign(d, std::vector<SparseVec<F>>(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) prod_[a][b] = R.basis_product(a, b);
    for (std::uint32_t b = 0; b < d; ++b) by_md_[R.md[b]].push_back(b);
    if (!R.basis.empty() && !R.basis[0].is_one()) throw VerificationFailure("algebra basis must start with 1");
  }

  TorProfile run(const ResolveOptions& opt) {
    TorProfile P;
    P.steps = opt.steps;
    P.degree_cap = opt.degree_cap.value_or(2 * opt.steps + R_.top());
    const int cap = P.degree_cap;

    // step 0: minimal generators of N
    Free f0;
    auto gens = minimal_generators(N_);
    for (std::size_t k = 0; k < gens.elements.size(); ++k) {
      f0.deg.push_back(gens.degrees[k]);
      f0.md.push_back(N_.md[gens.elements[k]]);
      f0.diff.push_back({{gens.elements[k], K_.one()}});
    }
    free_.push_back(std::move(f0));
    P.degrees.emplace_back();
    for (int d : free_[0].deg) P.degrees[0][d]++;
    P.complete.push_back(true);

    // dimensions of the previous kernel (for step 1 this is N itself: d_0 is onto)
    std::map<MultiDegree, std::size_t> prev_kernel_dim;
    for (std::size_t b = 0; b < N_.dim(); ++b) prev_kernel_dim[N_.md[b]]++;

    for (int s = 1; s <= opt.steps; ++s) {
      const Free& src = free_[s - 1];  // F_{s-1}; its kernel gives F_s
      auto blocks = element_blocks(src, cap);
      std::map<MultiDegree, std::size_t> kernel_dim;
      Free fs;
      // blocks ordered by multidegree, hence by total degree first
      std::vector<std::pair<MultiDegree, std::vector<Key>>> ordered(blocks.begin(), blocks.end());
      std::size_t q = 0;
      while (q < ordered.size()) {
        std::size_t q_end = q;
        const int deg = ordered[q].first[0];
        while (q_end < ordered.size() && ordered[q_end].first[0] == deg) ++q_end;
        std::vector<Free> found(q_end - q);
        std::vector<std::size_t> kdims(q_end - q);
        parallel_for(q_end - q, opt.jobs, [&](std::size_t t) {
          const auto& [mu, cols] = ordered[q + t];
          std::size_t before = prev_kernel_dim.count(mu) ? prev_kernel_dim.at(mu) : 0;
          if (before > cols.size()) throw VerificationFailure("resolution: kernel dimension exceeds block size");
          kdims[t] = cols.size() - before;
          found[t] = block_generators(s, mu, cols, kdims[t], fs);
        });
        for (std::size_t t = 0; t < found.size(); ++t) {
          kernel_dim[ordered[q + t].first] = kdims[t];
          for (std::size_t g = 0; g < found[t].deg.size(); ++g) {
            fs.deg.push_back(found[t].deg[g]);
            fs.md.push_back(found[t].md[g]);
            fs.diff.push_back(std::move(found[t].diff[g]));
          }
        }
        q = q_end;
      }
      int maxdeg = src.deg.empty() ? 0 : *std::max_element(src.deg.begin(), src.deg.end());
      bool complete = P.complete[s - 1] && (src.deg.empty() || maxdeg + R_.top() <= cap);
      P.complete.push_back(complete);
      P.degrees.emplace_back();
      for (int d : fs.deg) P.degrees[s][d]++;
      free_.push_back(std::move(fs));
      prev_kernel_dim = std::move(kernel_dim);
    }
    return P;
  }

 private:
  struct Free {
    std::vector<int> deg;
    std::vector<MultiDegree> md;
    std::vector<SparseVec<F>> diff;  // image of each generator in the previous module
  };

  std::map<MultiDegree, std::vector<Key>> element_blocks(const Free& f, int cap) const {
    std::map<MultiDegree, std::vector<Key>> out;
    const std::uint32_t d = static_cast<std::uint32_t>(R_.dim());
    for (std::uint32_t g = 0; g < f.deg.size(); ++g)
      for (std::uint32_t b = 0; b < d; ++b) {
        if (f.deg[g] + R_.degree_of(b) > cap) continue;
        out[md_add(f.md[g], R_.md[b])].push_back(g * d + b);
      }
    return out;
  }

  /// b * (element of a free module, keyed generator * dim + basis)
  SparseVec<F> times_basis(std::uint32_t b, const SparseVec<F>& v) const {
    const std::uint32_t d = static_cast<std::uint32_t>(R_.dim());
    std::vector<std::pair<Key, E>> out;
    for (const auto& [key, x] : v) {
      std::uint32_t g = key / d, c = key % d;
      for (const auto& [e, y] : prod_[b][c]) out.emplace_back(g * d + e, K_.mul(x, y));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
    SparseVec<F> w;
    for (auto& e : out) {
      if (!w.empty() && w.back().first == e.first) {
        w.back().second = K_.add(w.back().second, e.second);
        if (K_.is_zero(w.back().second)) w.pop_back();
      } else {
        w.push_back(std::move(e));
      }
    }
    return w;
  }

  /// Image under d_{s-1} of the element (g, b) of F_{s-1}.
  SparseVec<F> boundary(int s, Key key) const {
    const std::uint32_t d = static_cast<std::uint32_t>(R_.dim());
    std::uint32_t g = key / d, b = key % d;
    const SparseVec<F>& dg = free_[s - 1].diff[g];
    if (s - 1 == 0) {
      // into N: act by the monomial of b
      DenseAccumulator<F> acc(K_, N_.dim());
      for (const auto& [e, x] : dg) acc.add_scaled(N_.act_monomial(R_.basis[b], e), x);
      return acc.take();
    }
    return times_basis(b, dg);
  }

  /// New minimal generators of the kernel of d_{s-1} inside one block.
  Free block_generators(int s, const MultiDegree& mu, const std::vector<Key>& cols, std::size_t kappa,
                        const Free& lower) const {
    Free out;
    if (kappa == 0) return out;
    const std::uint32_t d = static_cast<std::uint32_t>(R_.dim());
    std::unordered_map<Key, std::uint32_t> local;
    for (std::uint32_t c = 0; c < cols.size(); ++c) local.emplace(cols[c], c);

    // span of R_+ multiples of generators found in lower degrees
    Echelon<F> span(K_, cols.size());
    for (std::size_t g = 0; g < lower.deg.size() && span.rank() < kappa; ++g) {
      if (lower.deg[g] >= mu[0]) continue;
      auto it = by_md_.find(md_sub(mu, lower.md[g]));
      if (it == by_md_.end()) continue;
      for (std::uint32_t b : it->second) {
        SparseVec<F> w = times_basis(b, lower.diff[g]);
        if (w.empty()) continue;
        for (auto& [key, x] : w) key = local.at(key);
        span.insert(w);
        if (span.rank() == kappa) break;
      }
    }
    if (span.rank() == kappa) return out;

    // kernel of d_{s-1} restricted to the non-pivot columns
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t c = 0; c < cols.size(); ++c)
      if (!span.is_pivot(c)) free_cols.push_back(c);
    std::vector<SparseVec<F>> images;
    std::unordered_map<Key, std::uint32_t> target;
    for (auto c : free_cols) {
      SparseVec<F> img = boundary(s, cols[c]);
      for (auto& [key, x] : img) key = target.emplace(key, static_cast<std::uint32_t>(target.size())).first->second;
      std::sort(img.begin(), img.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      images.push_back(std::move(img));
    }
    auto ker = kernel(K_, std::max<std::size_t>(target.size(), 1), images);
    if (ker.size() != kappa - span.rank())
      throw VerificationFailure("resolution: kernel count " + std::to_string(ker.size()) + " differs from the expected " +
                                std::to_string(kappa - span.rank()));
    for (const auto& kv : ker) {
      SparseVec<F> g;
      for (const auto& [c, x] : kv) g.emplace_back(cols[free_cols[c]], x);
      std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [key, x] : g)
        if (key % d == 0) throw VerificationFailure("resolution: boundary has a unit entry");
      out.deg.push_back(mu[0]);
      out.md.push_back(mu);
      out.diff.push_back(std::move(g));
    }
    return out;
  }

  const ArtinianAlgebra<F>& R_;
  const GradedModule<F>& N_;
  const F& K_;
  std::vector<std::vector<SparseVec<F>>> prod_;
  std::map<MultiDegree, std::vector<std::uint32_t>> by_md_;
  std::vector<Free> free_;
};

/// The residue field k as a module over R.
template <class F>
GradedModule<F> residue_field(const ArtinianAlgebra<F>& R) {
  std::vector<MultiDegree> vmd;
  for (std::size_t v = 0; v < R.nvars(); ++v) vmd.push_back(R.grading.variable(v));
  return make_module(R.field(), R.ring->names(), vmd, {0}, {MultiDegree(R.grading.rank(), 0)});
}

template <class F>
TorProfile resolve_module(const ArtinianAlgebra<F>& R, const GradedModule<F>& N, const ResolveOptions& opt) {
  if (opt.steps < 0) throw BadParameter("steps must be non-negative");
  Resolver<F> res(R, N);
  return res.run(opt);
}

template <class F>
TorProfile resolve_k_over_R(const ArtinianAlgebra<F>& R, const ResolveOptions& opt) {
  if (opt.steps < 1) throw BadParameter("steps must be at least 1");
  auto k = residue_field(R);
  return resolve_module(R, k, opt);
}

/// dim Tor_i^R(N, k)_j for all j up to the cap.
template <class F>
std::map<int, std::size_t> tor_of_module(const ArtinianAlgebra<F>& R, const GradedModule<F>& N, int i,
                                         std::optional<int> degree_cap = std::nullopt) {
  ResolveOptions opt;
  opt.steps = i;
  opt.degree_cap = degree_cap;
  return resolve_module(R, N, opt).degrees.at(i);
}

}  // namespace gor
