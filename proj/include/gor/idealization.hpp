#pragma once

// Nagata idealization R x omega_R(-reg-1) of a level Artinian algebra,
// presented as S[y_1..y_t]/(I + L + (y)^2), with a verifier.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gor/algebra.hpp"
#include "gor/artinian.hpp"
#include "gor/error.hpp"
#include "gor/groebner.hpp"
#include "gor/homology.hpp"

namespace gor {

enum class GeneratorTag { from_ideal, from_syzygy, y_square };

inline const char* tag_name(GeneratorTag t) {
  switch (t) {
    case GeneratorTag::from_ideal: return "from-I";
    case GeneratorTag::from_syzygy: return "from-syzygy";
    case GeneratorTag::y_square: return "y-square";
  }
  return "";
}

template <class F>
struct IdealizationResult {
  Ideal<F> ideal;
  std::vector<GeneratorTag> tags;
  std::vector<std::pair<int, int>> bidegrees;  // (x-degree, y-degree)
  std::vector<std::string> y_names;
  std::size_t type = 0;
  int reg = 0;  // of R
  Presentation<F> presentation;  // of omega_R
};

namespace detail {

/// y_1..y_t, falling back to yy_1.., yyy_1.. when a name is taken.
inline std::vector<std::string> fresh_names(const std::vector<std::string>& taken, std::size_t t) {
  std::set<std::string> used(taken.begin(), taken.end());
  for (std::string stem = "y";; stem += "y") {
    std::vector<std::string> out;
    bool ok = true;
    for (std::size_t k = 1; k <= t && ok; ++k) {
      out.push_back(stem + "_" + std::to_string(k));
      ok = !used.count(out.back());
    }
    if (ok) return out;
  }
}

template <class F>
Polynomial<F> lift(const Polynomial<F>& f, const RingPtr<F>& ring) {
  return Polynomial<F>::from_terms(ring, f.terms());
}

}  // namespace detail

/// R = S/I must be level; the result presents R x omega_R(-reg(R)-1).
template <class F>
IdealizationResult<F> idealize(const Ideal<F>& I) {
  auto R = quotient_algebra(I);
  auto tl = type_and_level(R);
  if (!tl.level) throw NotLevel("idealization needs a level algebra (omega_R has generators in several degrees)");
  const F& K = I.ring->field();
  IdealizationResult<F> res{Ideal<F>(I.ring, {})};
  res.type = tl.type;
  res.reg = R.top();
  res.presentation = minimal_presentation(canonical_module(R));
  const auto& P = res.presentation;
  const std::size_t n = I.ring->nvars(), t = P.generators.elements.size();
  if (n + t > Monomial::kMaxVars) throw InfeasibleSize("idealization needs more than 32 variables");
  res.y_names = detail::fresh_names(I.ring->names(), t);
  auto names = I.ring->names();
  names.insert(names.end(), res.y_names.begin(), res.y_names.end());
  auto ring = make_ring(K, names, I.ring->order());

  std::vector<Polynomial<F>> gens;
  for (const auto& g : minimal_generators(I)) {
    gens.push_back(detail::lift(g, ring));
    res.tags.push_back(GeneratorTag::from_ideal);
    res.bidegrees.emplace_back(g.degree(), 0);
  }
  for (std::size_t r = 0; r < P.relations.size(); ++r) {
    Polynomial<F> f(ring);
    int xdeg = P.relation_degrees[r] - P.generators.degrees.front();
    for (std::size_t g = 0; g < t; ++g)
      if (!P.relations[r][g].is_zero()) f = f + detail::lift(P.relations[r][g], ring) * Polynomial<F>::variable(ring, n + g);
    gens.push_back(f);
    res.tags.push_back(GeneratorTag::from_syzygy);
    res.bidegrees.emplace_back(xdeg, 1);
  }
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a; b < t; ++b) {
      gens.push_back(Polynomial<F>::variable(ring, n + a) * Polynomial<F>::variable(ring, n + b));
      res.tags.push_back(GeneratorTag::y_square);
      res.bidegrees.emplace_back(0, 2);
    }
  res.ideal = Ideal<F>(ring, std::move(gens));
  return res;
}

/// Structure-constant model of R x omega_R(-reg-1) as a module over the
/// variables x_1..x_n, y_1..y_t: (r, z) with y_g (r, 0) = (0, r w_g).
/// The grading gets one extra coordinate counting the omega part.
template <class F>
GradedModule<F> idealization_structure_model(const ArtinianAlgebra<F>& R, const std::vector<std::string>& y_names) {
  const F& K = R.field();
  auto w = canonical_module(R);
  auto gens = minimal_generators(w);
  const int reg = R.top();
  const std::size_t n = R.nvars(), t = gens.elements.size(), dR = R.dim();
  if (y_names.size() != t) throw BadParameter("wrong number of new variable names");
  auto ext = [](MultiDegree d, int last) {
    d.push_back(last);
    return d;
  };
  auto omega_md = [&](std::size_t e) {
    MultiDegree d = w.md[e];
    d[0] += reg + 1;
    return ext(d, 1);
  };
  std::vector<MultiDegree> vmd;
  for (std::size_t v = 0; v < n; ++v) vmd.push_back(ext(R.grading.variable(v), 0));
  for (std::size_t g = 0; g < t; ++g) vmd.push_back(md_sub(omega_md(gens.elements[g]), MultiDegree(vmd[0].size(), 0)));

  std::vector<std::pair<int, std::uint32_t>> items;
  for (std::uint32_t b = 0; b < dR; ++b) items.emplace_back(R.degree_of(b), b);
  for (std::uint32_t e = 0; e < w.dim(); ++e) items.emplace_back(w.degree_of(e) + reg + 1, static_cast<std::uint32_t>(dR + e));
  std::stable_sort(items.begin(), items.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<std::uint32_t> pos(items.size());
  std::vector<int> degs;
  std::vector<MultiDegree> mds;
  for (std::uint32_t k = 0; k < items.size(); ++k) {
    auto code = items[k].second;
    pos[code] = k;
    degs.push_back(items[k].first);
    mds.push_back(code < dR ? ext(R.md[code], 0) : omega_md(code - dR));
  }
  auto names = R.ring->names();
  names.insert(names.end(), y_names.begin(), y_names.end());
  auto M = make_module(K, names, vmd, degs, mds);
  auto place = [&](const SparseVec<F>& v, std::size_t off) {
    SparseVec<F> out;
    for (const auto& [c, x] : v) out.emplace_back(pos[off + c], x);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t b = 0; b < dR; ++b) M.action[v][pos[b]] = place(R.mult[v][b], 0);
    for (std::uint32_t e = 0; e < w.dim(); ++e) M.action[v][pos[dR + e]] = place(w.action[v][e], dR);
  }
  for (std::size_t g = 0; g < t; ++g)
    for (std::uint32_t b = 0; b < dR; ++b) M.action[n + g][pos[b]] = place(w.act_monomial(R.basis[b], gens.elements[g]), dR);
  return M;
}

struct IdealizationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdealizationReport {
  std::vector<IdealizationCheck> checks;
  std::size_t codim_R = 0, type_R = 0, codim_Rt = 0;
  int reg_R = 0, reg_Rt = 0;
  std::vector<std::size_t> hf_R, hf_Rt, hf_model;
  bool quadratic = false;
  bool superlevel = false;
  std::optional<BettiTable> betti_Rt;  // when feasible
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const IdealizationCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  std::size_t betti_chain_threshold = 5'000'000;  // full Koszul homology of R~ below this size
  int koszul_probe_steps = 4;                      // for the codim + type >= 8 consistency check
  int jobs = 1;
};

template <class F>
IdealizationReport verify_idealization(const IdealizationResult<F>& res, const Ideal<F>& I, const VerifyOptions& opt = {}) {
  IdealizationReport rep;
  auto R = quotient_algebra(I);
  auto Rt = quotient_algebra(res.ideal);
  auto add = [&rep](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  rep.hf_R = R.hilbert();
  rep.hf_Rt = Rt.hilbert();
  rep.codim_R = R.dim_at(1);
  rep.codim_Rt = Rt.dim_at(1);
  rep.type_R = res.type;
  rep.reg_R = R.top();
  rep.reg_Rt = Rt.top();

  add("codim", rep.codim_Rt == rep.codim_R + rep.type_R,
      std::to_string(rep.codim_Rt) + " = " + std::to_string(rep.codim_R) + " + " + std::to_string(rep.type_R));
  add("dimension", Rt.dim() == 2 * R.dim());

  // HF identity
  bool hf_ok = static_cast<int>(rep.hf_Rt.size()) == rep.reg_R + 2;
  for (int i = 0; hf_ok && i <= rep.reg_R + 1; ++i) {
    std::size_t a = i <= rep.reg_R ? rep.hf_R[i] : 0, b = rep.reg_R + 1 - i <= rep.reg_R ? rep.hf_R[rep.reg_R + 1 - i] : 0;
    hf_ok = rep.hf_Rt[i] == a + b;
  }
  add("hilbert-identity", hf_ok);

  // the structure-constant model: same Hilbert function, cyclic, generators vanish
  auto model = idealization_structure_model(R, res.y_names);
  model.validate();
  rep.hf_model = model.hilbert();
  bool vanish = true;
  for (const auto& g : res.ideal.generators) {
    DenseAccumulator<F> acc(model.field, model.dim());
    for (const auto& [m, c] : g.terms()) acc.add_scaled(model.act_monomial(m, 0), c);
    vanish = vanish && acc.take().empty();
  }
  auto mg = minimal_generators(model);
  add("structure-model", vanish && rep.hf_model == rep.hf_Rt && mg.elements.size() == 1,
      std::string(vanish ? "" : "generators do not vanish; ") + (rep.hf_model == rep.hf_Rt ? "" : "Hilbert functions differ"));

  auto tl = type_and_level(Rt);
  add("gorenstein", tl.type == 1, "type " + std::to_string(tl.type));
  bool pal = true;
  for (std::size_t i = 0; i < rep.hf_Rt.size(); ++i) pal = pal && rep.hf_Rt[i] == rep.hf_Rt[rep.hf_Rt.size() - 1 - i];
  add("palindromic", pal);
  add("y-squares", static_cast<std::size_t>(std::count(res.tags.begin(), res.tags.end(), GeneratorTag::y_square)) ==
                       res.type * (res.type + 1) / 2);

  // superlevel quadratic R gives quadratic R~. The converse fails: for
  // k[a,b]/(a^2,b^2) the quadratic syzygies of omega are redundant in R~.
  auto mins = minimal_generators(res.ideal);
  rep.quadratic = std::all_of(mins.begin(), mins.end(), [](const auto& g) { return g.degree() == 2; });
  rep.superlevel = res.presentation.linearly_presented_in_one_degree();
  auto Imin = minimal_generators(I);
  bool R_quadratic = std::all_of(Imin.begin(), Imin.end(), [](const auto& g) { return g.degree() == 2; });
  if (R_quadratic) add("superlevel-implies-quadratic", !rep.superlevel || rep.quadratic);

  // regularity via Koszul homology, and Betti symmetry
  const std::size_t nt = Rt.nvars();
  KoszulOptions ko;
  ko.jobs = opt.jobs;
  if (koszul_chain_dimension(Rt.as_module(), static_cast<int>(nt)) <= opt.betti_chain_threshold) {
    rep.betti_Rt = betti_over_S(Rt, ko);
    add("regularity", regularity(*rep.betti_Rt) == rep.reg_R + 1,
        std::to_string(regularity(*rep.betti_Rt)) + " = " + std::to_string(rep.reg_R) + " + 1");
    add("betti-symmetry", gorenstein_symmetry_check(*rep.betti_Rt, rep.reg_Rt));
    add("euler-identity", euler_identity(*rep.betti_Rt, rep.hf_Rt));
  } else {
    add("regularity", rep.reg_Rt == rep.reg_R + 1, "socle degree only; Koszul homology above threshold");
  }

  // codim(R) + type(R) >= 8 for non-Koszul level quadratic algebras of regularity 2
  if (R_quadratic && rep.reg_R == 2) {
    ResolveOptions ro;
    ro.steps = opt.koszul_probe_steps;
    ro.jobs = opt.jobs;
    auto prof = resolve_k_over_R(R, ro);
    if (linear_steps(prof) < ro.steps) add("codim-type-bound", rep.codim_R + rep.type_R >= 8);
  }
  return rep;
}

struct SplitCheck {
  int t2_R = 0, t2_Rt = 0;
  bool holds = false;
};

/// t_2(R~) >= t_2(R) from Koszul homology through homological degree 2.
template <class F>
SplitCheck bigraded_split_check(const IdealizationResult<F>& res, const Ideal<F>& I, std::size_t chain_threshold = 50'000'000,
                                int jobs = 1) {
  KoszulOptions ko;
  ko.max_i = 2;
  ko.jobs = jobs;
  ko.max_chain_dim = chain_threshold;
  auto tR = t_values(betti_over_S(quotient_algebra(I), ko));
  auto tT = t_values(betti_over_S(quotient_algebra(res.ideal), ko));
  SplitCheck s;
  if (tR.size() < 3 || !tR[2] || tT.size() < 3 || !tT[2]) throw VerificationFailure("second syzygies vanish");
  s.t2_R = *tR[2];
  s.t2_Rt = *tT[2];
  s.holds = s.t2_Rt >= s.t2_R;
  return s;
}

}  // namespace gor
