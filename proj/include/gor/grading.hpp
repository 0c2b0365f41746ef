#pragma once

// Finest multigrading compatible with a set of polynomials. Coordinate 0 is
// always the total degree, so ordering multidegrees lexicographically sorts
// them by total degree first.

#include <numeric>
#include <string>
#include <vector>

#include "gor/field.hpp"
#include "gor/polynomial.hpp"

namespace gor {

using MultiDegree = std::vector<int>;

inline MultiDegree md_add(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline MultiDegree md_sub(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline MultiDegree md_neg(const MultiDegree& a) {
  MultiDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

/// Integer weight matrix: weights[k][i] is the k-th degree of variable i.
struct Grading {
  std::vector<std::vector<int>> weights;

  static Grading standard(std::size_t nvars) { return Grading{{std::vector<int>(nvars, 1)}}; }

  std::size_t rank() const { return weights.size(); }
  std::size_t nvars() const { return weights.empty() ? 0 : weights[0].size(); }

  MultiDegree degree(const Monomial& m) const {
    MultiDegree d(weights.size(), 0);
    for (std::size_t k = 0; k < weights.size(); ++k)
      for (std::size_t i = 0; i < weights[k].size(); ++i) d[k] += weights[k][i] * m[i];
    return d;
  }

  MultiDegree variable(std::size_t i) const {
    MultiDegree d(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) d[k] = weights[k][i];
    return d;
  }
};

namespace detail {

// Reduced row echelon form over Q, in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<BigRational>>& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    BigRational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == r || sgn(a[q][c]) == 0) continue;
      BigRational f = a[q][c];
      for (std::size_t k = 0; k < ncols; ++k) a[q][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

inline std::vector<int> integral(const std::vector<BigRational>& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> w;
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt y = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    w.push_back(y);
  }
  std::vector<int> out;
  for (auto& y : w) {
    if (g != 0) y /= g;
    if (!y.fits_sint_p()) throw InfeasibleSize("grading weights overflow");
    out.push_back(static_cast<int>(y.get_si()));
  }
  return out;
}

}  // namespace detail

/// The finest grading by a free abelian group under which every given
/// polynomial is homogeneous (the polynomials must be standard homogeneous).
template <class F>
Grading finest_grading(std::size_t nvars, const std::vector<Polynomial<F>>& polys) {
  std::vector<std::vector<BigRational>> diffs;
  for (const auto& p : polys) {
    if (p.size() < 2) continue;
    const Monomial& m0 = p.terms().front().first;
    for (std::size_t t = 1; t < p.size(); ++t) {
      std::vector<BigRational> d(nvars);
      for (std::size_t i = 0; i < nvars; ++i) d[i] = p.terms()[t].first[i] - m0[i];
      diffs.push_back(std::move(d));
    }
  }
  auto pivots = detail::rref(diffs, nvars);
  std::vector<char> is_pivot(nvars, 0);
  for (auto c : pivots) is_pivot[c] = 1;

  // Null space basis: one vector per free column.
  std::vector<std::vector<BigRational>> null;
  for (std::size_t f = 0; f < nvars; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRational> v(nvars);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -diffs[r][f];
    null.push_back(std::move(v));
  }

  // Start from the total degree and complete to a basis of the null space.
  Grading g;
  std::vector<std::vector<BigRational>> span{std::vector<BigRational>(nvars, BigRational(1))};
  g.weights.push_back(std::vector<int>(nvars, 1));
  for (const auto& v : null) {
    auto trial = span;
    trial.push_back(v);
    auto copy = trial;
    if (detail::rref(copy, nvars).size() == trial.size()) {
      span = std::move(trial);
      g.weights.push_back(detail::integral(v));
    }
  }
  return g;
}

inline std::string md_string(const MultiDegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace gor
