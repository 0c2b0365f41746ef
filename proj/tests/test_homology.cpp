#include <gtest/gtest.h>

#include "gor/groebner.hpp"
#include "gor/homology.hpp"

using namespace gor;

namespace {

const PrimeField kFp(32003);

template <class F>
ArtinianAlgebra<F> algebra(const F& K, std::vector<std::string> vars, std::vector<std::string> gens) {
  auto r = make_ring(K, std::move(vars));
  return quotient_algebra(parse_ideal(gens, r));
}

const std::vector<std::string> kRoos4 = {"x^2+y*z+u^2", "x*u", "x^2+x*y", "x*z+y*u", "z*u+u^2", "y^2+z^2"};

template <class F>
ArtinianAlgebra<F> cm(const F& K, int m) {
  std::vector<std::string> vars, gens;
  std::string l;
  for (int i = 1; i <= 2 * m; ++i) {
    vars.push_back("x" + std::to_string(i));
    gens.push_back(vars.back() + "^2");
    l += (i > 1 ? "+" : "") + vars.back();
  }
  gens.push_back("(" + l + ")^2");
  return algebra(K, vars, gens);
}

using Entries = std::map<std::pair<int, int>, std::size_t>;

}  // namespace

TEST(Betti, Roos4Table) {
  auto R = algebra(kFp, {"u", "x", "y", "z"}, kRoos4);
  auto B = betti_over_S(R);
  EXPECT_EQ(B.beta, (Entries{{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 4}, {{2, 4}, 9}, {{3, 5}, 12}, {{4, 6}, 4}}));
  EXPECT_EQ(regularity(B), 2);
  auto t = t_values(B);
  // beta_{1,2} = 6 is the only entry in row i = 1, so t_1 = 2
  std::vector<std::optional<int>> expect{0, 2, 4, 5, 6};
  EXPECT_EQ(t, expect);
  EXPECT_TRUE(euler_identity(B, R.hilbert()));
  EXPECT_FALSE(gorenstein_symmetry_check(B, 2));
}

TEST(Betti, CmM3Table) {
  auto R = cm(kFp, 3);
  auto B = betti_over_S(R);
  EXPECT_EQ(B.beta, (Entries{{{0, 0}, 1},
                             {{1, 2}, 7},
                             {{2, 4}, 21},
                             {{2, 5}, 14},
                             {{3, 6}, 105},
                             {{4, 7}, 132},
                             {{5, 8}, 70},
                             {{6, 9}, 14}}));
  EXPECT_EQ(regularity(B), 3);
  auto t = t_values(B);
  EXPECT_EQ(t[1], 2);
  EXPECT_EQ(t[2], 5);
  auto v = subadditivity_report(t);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front(), (std::pair<int, int>{1, 1}));
  EXPECT_TRUE(euler_identity(B, R.hilbert()));
}

TEST(Betti, CompleteIntersections) {
  auto R = algebra(kFp, {"x", "y"}, {"x^2", "y^2"});
  auto B = betti_over_S(R);
  EXPECT_EQ(B.beta, (Entries{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}}));
  EXPECT_TRUE(gorenstein_symmetry_check(B, 2));
  auto C = algebra(kFp, {"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  auto t = t_values(betti_over_S(C));
  EXPECT_EQ(t, (std::vector<std::optional<int>>{0, 2, 4, 6}));
  EXPECT_TRUE(subadditivity_report(t).empty());
  auto D = algebra(kFp, {"x", "y", "z"}, {"x^3", "y^2", "z^2"});
  EXPECT_EQ(t_values(betti_over_S(D)), (std::vector<std::optional<int>>{0, 3, 5, 7}));
  EXPECT_EQ(regularity(betti_over_S(algebra(kFp, {"x"}, {"x^2"}))), 1);
}

TEST(Betti, FirstRowMatchesMinimalGenerators) {
  auto r = make_ring(kFp, {"u", "x", "y", "z"});
  auto I = parse_ideal(kRoos4, r);
  auto B = betti_over_S(quotient_algebra(I));
  std::map<int, std::size_t> gens;
  for (const auto& g : minimal_generators(I)) gens[g.degree()]++;
  for (const auto& [d, c] : gens) EXPECT_EQ(B.at(1, d), c);
  EXPECT_EQ(B.total(1), minimal_generators(I).size());
}

TEST(Betti, PartialTable) {
  auto R = cm(kFp, 3);
  KoszulOptions opt;
  opt.max_i = 2;
  auto B = betti_over_S(R, opt);
  EXPECT_FALSE(B.complete());
  EXPECT_EQ(B.at(2, 5), 14u);
  EXPECT_EQ(B.at(3, 6), 0u);
  opt.max_chain_dim = 10;
  EXPECT_THROW(betti_over_S(R, opt), InfeasibleSize);
}

TEST(Betti, ThreadsAgree) {
  auto R = cm(kFp, 3);
  KoszulOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(betti_over_S(R, one), betti_over_S(R, four));
}

TEST(Betti, CharacteristicIndependence) {
  EXPECT_EQ(betti_over_S(algebra(kFp, {"u", "x", "y", "z"}, kRoos4)).beta,
            betti_over_S(algebra(RationalField(), {"u", "x", "y", "z"}, kRoos4)).beta);
}

TEST(Subadditivity, Report) {
  EXPECT_TRUE(subadditivity_report(std::vector<int>{0, 2, 4, 6}).empty());
  auto v = subadditivity_report(std::vector<int>{0, 2, 5, 6});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (std::pair<int, int>{1, 1}));
}

TEST(Resolution, QuadricHypersurfaceIsLinear) {
  auto R = algebra(kFp, {"x"}, {"x^2"});
  ResolveOptions opt;
  opt.steps = 6;
  auto P = resolve_k_over_R(R, opt);
  for (int s = 0; s <= 6; ++s) {
    EXPECT_EQ(P.count(s), 1u);
    EXPECT_EQ(P.at(s, s), 1u);
  }
  EXPECT_FALSE(P.cap_exceeded());
  EXPECT_EQ(linear_steps(P), 6);
}

TEST(Resolution, CubicHypersurfaceIsNot) {
  auto R = algebra(kFp, {"x"}, {"x^3"});
  ResolveOptions opt;
  opt.steps = 3;
  auto P = resolve_k_over_R(R, opt);
  EXPECT_EQ(P.at(1, 1), 1u);
  EXPECT_EQ(P.at(2, 3), 1u);
  EXPECT_EQ(P.at(3, 4), 1u);
  EXPECT_EQ(linear_steps(P), 1);
}

TEST(Resolution, KoszulCompleteIntersectionBetti) {
  // P(t) = 1/(1-t)^2 for k[x,y]/(x^2,y^2)
  auto R = algebra(kFp, {"x", "y"}, {"x^2", "y^2"});
  ResolveOptions opt;
  opt.steps = 5;
  auto P = resolve_k_over_R(R, opt);
  for (int s = 0; s <= 5; ++s) EXPECT_EQ(P.at(s, s), static_cast<std::size_t>(s + 1));
  EXPECT_EQ(linear_steps(P), 5);
}

TEST(Resolution, Roos4NotKoszul) {
  auto R = algebra(kFp, {"u", "x", "y", "z"}, kRoos4);
  ResolveOptions opt;
  opt.steps = 5;
  auto P = resolve_k_over_R(R, opt);
  int s = linear_steps(P);
  EXPECT_LT(s, 5);
  // frozen regression: first nonlinear syzygy appears at step 3
  EXPECT_EQ(s, 2);
}

TEST(Resolution, CmM2NotKoszulWithinSixSteps) {
  auto R = cm(kFp, 2);
  ResolveOptions opt;
  opt.steps = 6;
  auto P = resolve_k_over_R(R, opt);
  EXPECT_LT(linear_steps(P), 6);
}

TEST(Resolution, FieldsAgree) {
  ResolveOptions opt;
  opt.steps = 4;
  auto a = resolve_k_over_R(algebra(kFp, {"u", "x", "y", "z"}, kRoos4), opt);
  auto b = resolve_k_over_R(algebra(RationalField(), {"u", "x", "y", "z"}, kRoos4), opt);
  EXPECT_EQ(a, b);
}

TEST(Resolution, FreeModuleHasNoTor) {
  auto R = algebra(kFp, {"x", "y"}, {"x^2", "x*y", "y^2"});
  auto P = resolve_module(R, R.as_module(), ResolveOptions{2});
  EXPECT_EQ(P.count(0), 1u);
  EXPECT_EQ(P.count(1), 0u);
  EXPECT_EQ(P.count(2), 0u);
  EXPECT_TRUE(tor_of_module(R, R.as_module(), 1).empty());
}

TEST(Resolution, Deterministic) {
  auto R = cm(kFp, 2);
  ResolveOptions opt;
  opt.steps = 3;
  EXPECT_EQ(resolve_k_over_R(R, opt), resolve_k_over_R(R, opt));
  opt.jobs = 3;
  auto c = resolve_k_over_R(R, opt);
  opt.jobs = 1;
  EXPECT_EQ(resolve_k_over_R(R, opt), c);
}
