#pragma once

// Example families with frozen generator strings, closed-form Hilbert
// functions, and the two-generator module M over k[v,w,x,y]/((x,y)^2+(v,w)^2)
// whose idealization is the alpha family.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gor/algebra.hpp"
#include "gor/artinian.hpp"
#include "gor/error.hpp"
#include "gor/field.hpp"
#include "gor/grading.hpp"
#include "gor/groebner.hpp"
#include "gor/ideal_file.hpp"

namespace gor {

enum class Family { roos4, cm, roos_alpha, stanley, ci };

struct FamilySpec {
  Family family = Family::roos4;
  int m = 0;                 // cm
  int alpha = 0;             // roos_alpha
  std::vector<int> degrees;  // ci
  FieldSpec field;

  std::string name() const {
    switch (family) {
      case Family::roos4: return "roos4";
      case Family::cm: return "cm-m" + std::to_string(m);
      case Family::roos_alpha: return "roos-alpha-" + std::to_string(alpha);
      case Family::stanley: return "stanley";
      case Family::ci: {
        std::string s = "ci";
        for (int d : degrees) s += "-" + std::to_string(d);
        return s;
      }
    }
    return "";
  }

  void validate() const {
    switch (family) {
      case Family::cm:
        if (m < 2) throw BadParameter("cm family needs m >= 2");
        if (m > 16) throw InfeasibleSize("cm family supports m <= 16 (2m variables)");
        if (field.characteristic() != 0 && field.characteristic() <= static_cast<std::uint64_t>(2 * m + 1))
          throw BadParameter("cm family over F_p needs p > 2m+1 (m = " + std::to_string(m) + ")");
        break;
      case Family::roos_alpha:
        if (alpha < 2) throw BadParameter("roos-alpha family needs alpha >= 2");
        break;
      case Family::ci:
        if (degrees.empty()) throw BadParameter("ci family needs at least one degree");
        if (degrees.size() > Monomial::kMaxVars) throw InfeasibleSize("too many variables");
        for (int d : degrees)
          if (d < 1 || d > 255) throw BadParameter("ci degrees must lie in 1..255");
        break;
      default: break;
    }
  }
};

/// Parses "roos4", "cm-m3", "roos-alpha-2", "stanley", "ci-2-2-2".
inline FamilySpec parse_family_ref(const std::string& ref, FieldSpec field = {}) {
  FamilySpec s;
  s.field = field;
  auto int_of = [&](const std::string& t) {
    if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw BadParameter("bad family reference '" + ref + "'");
    return std::stoi(t);
  };
  if (ref == "roos4") s.family = Family::roos4;
  else if (ref == "stanley") s.family = Family::stanley;
  else if (ref.rfind("cm-m", 0) == 0) {
    s.family = Family::cm;
    s.m = int_of(ref.substr(4));
  } else if (ref.rfind("roos-alpha-", 0) == 0) {
    s.family = Family::roos_alpha;
    s.alpha = int_of(ref.substr(11));
  } else if (ref.rfind("ci-", 0) == 0) {
    s.family = Family::ci;
    std::string rest = ref.substr(3);
    std::size_t pos;
    while ((pos = rest.find('-')) != std::string::npos) {
      s.degrees.push_back(int_of(rest.substr(0, pos)));
      rest = rest.substr(pos + 1);
    }
    s.degrees.push_back(int_of(rest));
  } else {
    throw BadParameter("unknown family '" + ref + "' (expected roos4, cm-m<m>, roos-alpha-<a>, stanley, ci-<d>-...)");
  }
  s.validate();
  return s;
}

inline const std::vector<std::string>& roos4_generators() {
  static const std::vector<std::string> g = {"x^2+y*z+u^2", "x*u", "x^2+x*y", "x*z+y*u", "z*u+u^2", "y^2+z^2"};
  return g;
}

/// The exact generator text of a family member.
inline IdealFile family_file(const FamilySpec& s) {
  s.validate();
  IdealFile f;
  f.field = s.field;
  switch (s.family) {
    case Family::roos4:
      f.vars = {"u", "x", "y", "z"};
      f.generators = roos4_generators();
      break;
    case Family::cm: {
      std::string l;
      for (int i = 1; i <= 2 * s.m; ++i) {
        f.vars.push_back("x" + std::to_string(i));
        f.generators.push_back(f.vars.back() + "^2");
        l += (i > 1 ? "+" : "") + f.vars.back();
      }
      f.generators.push_back("(" + l + ")^2");
      break;
    }
    case Family::roos_alpha: {
      f.vars = {"u", "v", "w", "x", "y", "z"};
      f.generators = {"x^2", "x*y", "y^2", "y*z", "z^2", "z*u", "u^2", "u*v", "v^2", "v*w", "w^2"};
      f.generators.push_back("x*z+" + std::to_string(s.alpha) + "*z*w-u*w");
      f.generators.push_back("z*w+x*u+" + std::to_string(s.alpha - 2) + "*u*w");
      break;
    }
    case Family::stanley:
      f.vars = {"x", "y", "z"};
      for (int a = 4; a >= 0; --a)
        for (int b = 4 - a; b >= 0; --b) {
          int c = 4 - a - b;
          std::string t;
          auto put = [&t](const char* v, int e) {
            if (!e) return;
            if (!t.empty()) t += "*";
            t += v;
            if (e > 1) t += "^" + std::to_string(e);
          };
          put("x", a);
          put("y", b);
          put("z", c);
          f.generators.push_back(t);
        }
      break;
    case Family::ci:
      for (std::size_t i = 0; i < s.degrees.size(); ++i) {
        f.vars.push_back("x" + std::to_string(i + 1));
        f.generators.push_back(f.vars.back() + "^" + std::to_string(s.degrees[i]));
      }
      break;
  }
  return f;
}

/// Content hashes of the frozen fixtures (generator text over fp:32003).
inline const std::map<std::string, std::string>& frozen_family_hashes() {
  static const std::map<std::string, std::string> h = {
      {"roos4", "e9963a0546fa5c24"},
      {"cm-m2", "baa8412ed62130d7"},
      {"cm-m3", "56f9717eba361f80"},
      {"roos-alpha-2", "fc94d80beeb4e295"},
      {"roos-alpha-3", "42d78e4f75894ac1"},
      {"stanley", "490d7361530d0302"},
  };
  return h;
}

template <class F>
Ideal<F> build(const FamilySpec& s, const F& K) {
  return family_file(s).ideal(K);
}

// ---------------------------------------------------------------------------
// closed forms

/// [C(2m, i) - C(2m, i-2)]
inline BigInt cm_hilbert(long m, long i) {
  if (i < 0) return 0;
  return truncate_nonneg(binomial(2 * m, i) - binomial(2 * m, i - 2));
}

/// Hilbert function of the idealization of the cm family member:
/// HF_R(i) + HF_R(m + 1 - i).
inline BigInt idealized_hilbert(long m, long i) {
  if (i < 0 || i > m + 1) return 0;
  return cm_hilbert(m, i) + cm_hilbert(m, m + 1 - i);
}

inline std::vector<BigInt> idealized_h_vector(long m) {
  std::vector<BigInt> h;
  for (long i = 0; i <= m + 1; ++i) h.push_back(idealized_hilbert(m, i));
  return h;
}

/// t_i = d_1 + ... + d_i with the degrees sorted descending.
inline std::vector<int> ci_t_values(std::vector<int> degrees) {
  for (int d : degrees)
    if (d < 1) throw BadParameter("complete intersection degrees must be positive");
  std::sort(degrees.rbegin(), degrees.rend());
  std::vector<int> t{0};
  for (int d : degrees) t.push_back(t.back() + d);
  return t;
}

struct InequalityWitness {
  long m = 0;
  BigRational ratio;  // HF_A(1) / HF_A(floor(m/2))
  bool ratio_exceeds_one = false;
  bool valley_2_3 = false;    // HF_A(3) < HF_A(2)
  bool non_unimodal = false;  // certified from the whole h-vector
  bool passes = false;
};

/// Non-unimodality of the idealized cm family, from exact big-integer values.
/// HF_A(1) > HF_A(floor(m/2)) holds from m = 10 on; for 7 <= m <= 9 the dip
/// HF_A(3) < HF_A(2) certifies it instead.
inline InequalityWitness inequality_witness(long m) {
  if (m < 7) throw BadParameter("inequality witness needs m >= 7");
  InequalityWitness w;
  w.m = m;
  BigInt a = idealized_hilbert(m, 1), b = idealized_hilbert(m, m / 2);
  w.ratio = BigRational(a, b);
  w.ratio.canonicalize();
  w.ratio_exceeds_one = a > b;
  w.valley_2_3 = idealized_hilbert(m, 3) < idealized_hilbert(m, 2);
  w.non_unimodal = !unimodality(idealized_h_vector(m)).unimodal;
  // HF_A is palindromic, so a value below HF_A(1) strictly inside, or the dip
  // at 3 mirrored at m - 2, forces a rise after a descent
  bool palindromic = true;
  for (long i = 0; i <= m + 1; ++i) palindromic = palindromic && idealized_hilbert(m, i) == idealized_hilbert(m, m + 1 - i);
  w.passes = palindromic && w.non_unimodal && (w.ratio_exceeds_one || w.valley_2_3);
  return w;
}

// ---------------------------------------------------------------------------
// the module M

/// Variables of A in the order used throughout: v, w, x, y.
inline const std::vector<std::string>& roos_a_variables() {
  static const std::vector<std::string> v = {"v", "w", "x", "y"};
  return v;
}

template <class F>
struct RoosModule {
  ArtinianAlgebra<F> A;  // k[v,w,x,y]/(x^2,xy,y^2,v^2,vw,w^2)
  GradedModule<F> M;     // basis e1, e2, f1, f2, f3, f4
  int alpha = 0;
  Grading ring_grading;  // grading of k[u,v,w,x,y,z] making I(alpha) homogeneous
};

/// The table entry in row e_i, column f_j is a linear form l with l e_i = f_j.
/// With `literal` the entry in row e2, column f2 is read as (alpha-2)w - x;
/// otherwise as -(alpha-2)w - x, the sign compatible with the ideal.
template <class F>
RoosModule<F> roos_module(int alpha, const F& K, bool literal = false) {
  if (alpha < 2) throw BadParameter("alpha must be at least 2");
  FamilySpec spec;
  spec.family = Family::roos_alpha;
  spec.alpha = alpha;
  spec.field = K.spec();
  auto I = build(spec, K);
  RoosModule<F> out;
  out.alpha = alpha;
  out.ring_grading = quotient_algebra(I).grading;
  // ring variables u v w x y z -> indices 0..5; A uses v w x y = 1..4
  Grading ag;
  for (const auto& row : out.ring_grading.weights) ag.weights.push_back({row[1], row[2], row[3], row[4]});
  auto ring = make_ring(K, roos_a_variables());
  out.A = quotient_algebra(parse_ideal({"x^2", "x*y", "y^2", "v^2", "v*w", "w^2"}, ring));
  out.A.regrade(ag);

  std::vector<MultiDegree> vmd;
  for (std::size_t v = 0; v < 4; ++v) vmd.push_back(ag.variable(v));
  // e1, e2 sit in degree 0 of M and play the roles of z, u in degree 1 of A x M(-1)
  MultiDegree e1 = out.ring_grading.variable(5), e2 = out.ring_grading.variable(0);
  e1[0] -= 1;
  e2[0] -= 1;
  const MultiDegree f1 = md_add(e1, vmd[0]), f2 = md_add(e1, vmd[1]), f3 = md_add(e2, vmd[1]), f4 = md_add(e2, vmd[3]);
  out.M = make_module(K, roos_a_variables(), vmd, {0, 0, 1, 1, 1, 1}, {e1, e2, f1, f2, f3, f4});
  enum { V, W, X, Y };
  enum : std::uint32_t { E1, E2, F1, F2, F3, F4 };
  auto a = K.from_int(alpha), am2 = K.from_int(alpha - 2);
  auto& act = out.M.action;
  act[V][E1] = {{F1, K.one()}};
  act[W][E1] = {{F2, K.one()}};
  // (x + alpha w) e1 = f3
  act[X][E1] = {{F2, K.neg(a)}, {F3, K.one()}};
  act[W][E2] = {{F3, K.one()}};
  act[Y][E2] = {{F4, K.one()}};
  // (c w - x) e2 = f2 with c = alpha-2 (literal) or -(alpha-2)
  auto c = literal ? am2 : K.neg(am2);
  SparseVec<F> xe2{{F2, K.neg(K.one())}};
  if (!K.is_zero(c)) xe2.emplace_back(F3, c);
  act[X][E2] = xe2;
  return out;
}

/// Model of A x M(-1) over k[u,v,w,x,y,z], with z acting as e1 and u as e2.
template <class F>
GradedModule<F> idealization_model(const RoosModule<F>& rm) {
  const auto& A = rm.A;
  const auto& M = rm.M;
  const F& K = A.field();
  const std::size_t dA = A.dim();
  std::vector<MultiDegree> vmd;
  for (std::size_t v = 0; v < 6; ++v) vmd.push_back(rm.ring_grading.variable(v));
  // basis: A by degree, then M(-1) by degree; interleave by total degree
  std::vector<std::pair<int, std::uint32_t>> items;  // (degree, code): code < dA -> A, else M
  for (std::uint32_t b = 0; b < dA; ++b) items.emplace_back(A.degree_of(b), b);
  for (std::uint32_t b = 0; b < M.dim(); ++b) items.emplace_back(M.degree_of(b) + 1, static_cast<std::uint32_t>(dA + b));
  std::stable_sort(items.begin(), items.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<std::uint32_t> pos(items.size());
  std::vector<int> degs;
  std::vector<MultiDegree> mds;
  for (std::uint32_t k = 0; k < items.size(); ++k) {
    pos[items[k].second] = k;
    degs.push_back(items[k].first);
    std::uint32_t code = items[k].second;
    MultiDegree d = code < dA ? A.md[code] : M.md[code - dA];
    if (code >= dA) d[0] += 1;
    mds.push_back(std::move(d));
  }
  std::vector<std::string> names = {"u", "v", "w", "x", "y", "z"};
  auto R = make_module(K, names, vmd, degs, mds);
  auto place = [&](const SparseVec<F>& v, std::size_t off) {
    SparseVec<F> out;
    for (const auto& [c, x] : v) out.emplace_back(pos[off + c], x);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  for (std::size_t av = 0; av < 4; ++av) {
    for (std::uint32_t b = 0; b < dA; ++b) R.action[av + 1][pos[b]] = place(A.mult[av][b], 0);
    for (std::uint32_t b = 0; b < M.dim(); ++b) R.action[av + 1][pos[dA + b]] = place(M.action[av][b], dA);
  }
  // z . a = a e1 and u . a = a e2 for a in A; both kill M
  for (std::uint32_t b = 0; b < dA; ++b) {
    R.action[5][pos[b]] = place(M.act_monomial(A.basis[b], 0), dA);
    R.action[0][pos[b]] = place(M.act_monomial(A.basis[b], 1), dA);
  }
  return R;
}

struct ReconstructionReport {
  std::vector<std::size_t> hf_model, hf_quotient;
  std::size_t quadrics_model = 0, quadrics_ideal = 0;
  bool relations_vanish = false;
  bool cyclic = false;
  bool agree() const {
    return hf_model == hf_quotient && quadrics_model == quadrics_ideal && relations_vanish && cyclic;
  }
};

/// Compares A x M(-1) with S/I(alpha). The ideal's generators vanish on the
/// model, the model is generated by 1, and the Hilbert functions agree, so
/// S/I(alpha) -> A x M(-1) is an isomorphism.
template <class F>
ReconstructionReport reconstruct_R_from_idealization(int alpha, const F& K, bool literal = false) {
  auto rm = roos_module(alpha, K, literal);
  auto model = idealization_model(rm);
  model.validate();
  FamilySpec spec;
  spec.family = Family::roos_alpha;
  spec.alpha = alpha;
  spec.field = K.spec();
  auto I = build(spec, K);
  auto R = quotient_algebra(I);
  ReconstructionReport rep;
  rep.hf_model = model.hilbert();
  rep.hf_quotient = R.hilbert();
  rep.quadrics_ideal = minimal_generators(I).size();
  rep.quadrics_model = I.ring->monomials_of_degree(2).size() - model.dim_at(2);
  rep.relations_vanish = true;
  const std::uint32_t one = 0;
  for (const auto& g : I.generators) {
    DenseAccumulator<F> acc(K, model.dim());
    for (const auto& [m, c] : g.terms()) acc.add_scaled(model.act_monomial(m, one), c);
    if (!acc.take().empty()) rep.relations_vanish = false;
  }
  auto gens = minimal_generators(model);
  rep.cyclic = gens.elements.size() == 1 && gens.degrees[0] == 0;
  return rep;
}

/// Hom_k(M(+1), k): the module omega_M(-1), generated by the f_j^* in degree 0.
template <class F>
GradedModule<F> roos_omega_m(const RoosModule<F>& rm) {
  return dual_module(rm.M.shifted(1));
}

/// omega_R restricted to A along A -> R (the variables v, w, x, y).
template <class F>
GradedModule<F> restrict_to_a(const GradedModule<F>& N, const RoosModule<F>& rm) {
  GradedModule<F> r = N;
  r.var_names = roos_a_variables();
  r.var_md.clear();
  r.action.clear();
  for (std::size_t v = 0; v < 4; ++v) {
    if (N.var_md[v + 1] != rm.A.grading.variable(v)) throw BadParameter("module grading differs from the grading of A");
    r.var_md.push_back(N.var_md[v + 1]);
    r.action.push_back(N.action[v + 1]);
  }
  return r;
}

}  // namespace gor
