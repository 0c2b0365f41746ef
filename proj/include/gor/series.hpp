#pragma once

// Hilbert series and truncated bigraded Poincare series sum beta_{i,j} x^i y^j,
// with the two Gulliksen relations for the alpha family.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gor/algebra.hpp"
#include "gor/constructions.hpp"
#include "gor/error.hpp"
#include "gor/field.hpp"
#include "gor/homology.hpp"
#include "gor/idealization.hpp"

namespace gor {

template <class F>
std::vector<std::size_t> hilbert_series(const ArtinianAlgebra<F>& R) {
  return R.hilbert();
}

/// Coefficients in homological degree i <= order and internal degree j <= cap.
struct PoincareTruncation {
  int order = 0;
  int cap = 0;
  bool reduced = false;  // some operand had a smaller order or cap
  std::map<std::pair<int, int>, BigInt> coef;

  static PoincareTruncation one(int order, int cap) {
    PoincareTruncation p{order, cap};
    p.coef[{0, 0}] = 1;
    return p;
  }

  /// From a resolution; only the steps searched completely below `cap` count.
  static PoincareTruncation from_profile(const TorProfile& prof, int order, int cap) {
    if (order > prof.steps) throw BadParameter("profile has fewer steps than the requested order");
    if (cap > prof.degree_cap) throw BadParameter("profile degree cap is below the requested cap");
    PoincareTruncation p{order, cap};
    for (int i = 0; i <= order; ++i)
      for (const auto& [j, c] : prof.degrees[i])
        if (j <= cap && c) p.coef[{i, j}] = BigInt(static_cast<unsigned long>(c));
    return p;
  }

  BigInt at(int i, int j) const {
    auto it = coef.find({i, j});
    return it == coef.end() ? BigInt(0) : it->second;
  }

  bool nonnegative() const {
    return std::all_of(coef.begin(), coef.end(), [](const auto& e) { return e.second >= 0; });
  }

  /// x^a y^b * this
  PoincareTruncation shifted(int a, int b) const {
    PoincareTruncation p{order, cap, reduced};
    for (const auto& [ij, c] : coef)
      if (ij.first + a <= order && ij.second + b <= cap && ij.first + a >= 0) p.coef[{ij.first + a, ij.second + b}] = c;
    return p;
  }

  void clip() {
    for (auto it = coef.begin(); it != coef.end();)
      it = (it->first.first > order || it->first.second > cap || it->second == 0) ? coef.erase(it) : std::next(it);
  }

  bool operator==(const PoincareTruncation& o) const { return order == o.order && cap == o.cap && coef == o.coef; }
};

namespace detail {
inline PoincareTruncation common_frame(const PoincareTruncation& a, const PoincareTruncation& b) {
  PoincareTruncation p;
  p.order = std::min(a.order, b.order);
  p.cap = std::min(a.cap, b.cap);
  p.reduced = a.reduced || b.reduced || a.order != b.order || a.cap != b.cap;
  return p;
}
}  // namespace detail

inline PoincareTruncation operator+(const PoincareTruncation& a, const PoincareTruncation& b) {
  auto p = detail::common_frame(a, b);
  for (const auto* s : {&a, &b})
    for (const auto& [ij, c] : s->coef) p.coef[ij] += c;
  p.clip();
  return p;
}

inline PoincareTruncation operator*(const PoincareTruncation& a, const PoincareTruncation& b) {
  auto p = detail::common_frame(a, b);
  for (const auto& [ij, c] : a.coef)
    for (const auto& [kl, d] : b.coef) {
      int i = ij.first + kl.first, j = ij.second + kl.second;
      if (i <= p.order && j <= p.cap) p.coef[{i, j}] += c * d;
    }
  p.clip();
  return p;
}

/// (1 - q)^{-1} = 1 + q + q^2 + ...; q must have no constant term. A negative
/// coefficient on non-negative input means an upstream bug and throws.
inline PoincareTruncation geometric_inverse(const PoincareTruncation& q) {
  if (q.at(0, 0) != 0) throw BadParameter("geometric inverse needs a series without constant term");
  bool nonneg_in = q.nonnegative();
  auto result = PoincareTruncation::one(q.order, q.cap);
  result.reduced = q.reduced;
  auto power = result;
  // every term of q raises i + j by at least 1
  for (int k = 1; k <= q.order + q.cap + 1; ++k) {
    power = power * q;
    if (power.coef.empty()) break;
    result = result + power;
    if (nonneg_in && !result.nonnegative()) throw VerificationFailure("negative coefficient in geometric series");
  }
  return result;
}

struct GulliksenResult {
  int order = 0, cap = 0;
  PoincareTruncation lhs, rhs;
  bool equal() const { return lhs.coef == rhs.coef; }
};

/// P_{R~}^k = P_R^k (1 - xy P_R^{omega_R(-2)})^{-1} through homological order N.
template <class F>
GulliksenResult gulliksen_check_1(int alpha, int N, const F& K, int jobs = 1) {
  if (N < 0 || N > 4) throw InfeasibleSize("Gulliksen check supports truncation order 0..4");
  FamilySpec spec;
  spec.family = Family::roos_alpha;
  spec.alpha = alpha;
  spec.field = K.spec();
  auto I = build(spec, K);
  auto R = quotient_algebra(I);
  auto Rt = quotient_algebra(idealize(I).ideal);
  GulliksenResult g;
  g.order = N;
  g.cap = N + Rt.top() + 1;
  ResolveOptions o;
  o.jobs = jobs;
  o.degree_cap = g.cap;
  o.steps = std::max(N, 1);
  g.lhs = PoincareTruncation::from_profile(resolve_k_over_R(Rt, o), N, g.cap);
  auto pk = PoincareTruncation::from_profile(resolve_k_over_R(R, o), N, g.cap);
  o.steps = std::max(N - 1, 0);
  auto w = canonical_module(R).shifted(-2);
  auto pw = PoincareTruncation::from_profile(resolve_module(R, w, o), o.steps, g.cap);
  pw.order = N;  // x y P only needs P through order N - 1
  g.rhs = pk * geometric_inverse(pw.shifted(1, 1));
  return g;
}

/// P_R^{omega_R} = P_A^{omega_R} (1 - xy P_A^M)^{-1}, with omega_R(-2)
/// (generated in degree 0) on both sides.
template <class F>
GulliksenResult gulliksen_check_2(int alpha, int N, const F& K, int jobs = 1) {
  if (N < 0 || N > 4) throw InfeasibleSize("Gulliksen check supports truncation order 0..4");
  auto rm = roos_module(alpha, K);
  FamilySpec spec;
  spec.family = Family::roos_alpha;
  spec.alpha = alpha;
  spec.field = K.spec();
  auto R = quotient_algebra(build(spec, K));
  auto w = canonical_module(R).shifted(-2);
  auto wa = restrict_to_a(w, rm);
  GulliksenResult g;
  g.order = N;
  g.cap = N + R.top() + 1;
  ResolveOptions o;
  o.jobs = jobs;
  o.degree_cap = g.cap;
  o.steps = N;
  g.lhs = PoincareTruncation::from_profile(resolve_module(R, w, o), N, g.cap);
  auto pa = PoincareTruncation::from_profile(resolve_module(rm.A, wa, o), N, g.cap);
  o.steps = std::max(N - 1, 0);
  auto pm = PoincareTruncation::from_profile(resolve_module(rm.A, rm.M, o), o.steps, g.cap);
  pm.order = N;
  g.rhs = pa * geometric_inverse(pm.shifted(1, 1));
  return g;
}

}  // namespace gor
