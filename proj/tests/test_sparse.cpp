#include <gtest/gtest.h>

#include <random>

#include "gor/sparse.hpp"

using namespace gor;

template <class F>
std::vector<SparseVec<F>> random_vectors(const F& K, std::size_t count, std::size_t dim, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<SparseVec<F>> out;
  for (std::size_t r = 0; r < count; ++r) {
    SparseVec<F> v;
    for (std::size_t i = 0; i < dim; ++i)
      if (u(rng) < density) {
        auto x = K.from_int(static_cast<long long>(rng() % 7) - 3);
        if (!K.is_zero(x)) v.emplace_back(static_cast<std::uint32_t>(i), x);
      }
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
SparseVec<F> combine(const F& K, const std::vector<SparseVec<F>>& cols, const SparseVec<F>& coeffs, std::size_t dim) {
  DenseAccumulator<F> acc(K, dim);
  for (const auto& [c, x] : coeffs) acc.add_scaled(cols[c], x);
  return acc.take();
}

TEST(Sparse, RankSmallKnown) {
  PrimeField K(7);
  std::vector<SparseVec<PrimeField>> v{{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {2, 6}}};
  EXPECT_EQ(rank(K, 3, v), 2u);
  v.push_back({{2, 3}});
  EXPECT_EQ(rank(K, 3, v), 3u);
}

TEST(Sparse, DenseAndSparsePathsAgree) {
  PrimeField K(32003);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto vecs = random_vectors(K, 300, 200, 0.02, seed);
    std::size_t dense = detail::dense_rank(K, 200, vecs);
    Echelon<PrimeField> ech(K, 200);
    for (const auto& v : vecs) ech.insert(v);
    EXPECT_EQ(dense, ech.rank());
  }
  auto big = random_vectors(K, 900, 600, 0.01, 11);
  EXPECT_EQ(rank(K, 600, big), detail::dense_rank(K, 600, big));
}

TEST(Sparse, KernelVectorsAreInKernelAndCountMatches) {
  PrimeField K(32003);
  auto cols = random_vectors(K, 60, 40, 0.08, 5);
  auto ker = kernel(K, 40, cols);
  EXPECT_EQ(ker.size() + rank(K, 40, cols), cols.size());
  for (const auto& k : ker) {
    EXPECT_TRUE(combine(K, cols, k, 40).empty());
    EXPECT_TRUE(K.is_one(k.back().second));
  }
  EXPECT_EQ(rank(K, 60, ker), ker.size());
}

TEST(Sparse, RationalKernel) {
  RationalField Q;
  std::vector<SparseVec<RationalField>> cols{{{0, BigRational(1, 2)}}, {{0, BigRational(3)}, {1, BigRational(1)}},
                                              {{1, BigRational(-2)}}};
  auto ker = kernel(Q, 2, cols);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(combine(Q, cols, ker[0], 2).empty());
}

TEST(Sparse, EchelonContains) {
  PrimeField K(101);
  Echelon<PrimeField> e(K, 4);
  e.insert({{1, 2}, {3, 5}});
  EXPECT_TRUE(e.contains({{1, 4}, {3, 10}}));
  EXPECT_FALSE(e.contains({{3, 1}}));
}
