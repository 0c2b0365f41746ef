#include <gtest/gtest.h>

#include "gor/constructions.hpp"
#include "gor/idealization.hpp"

using namespace gor;

namespace {
const PrimeField kFp(32003);

std::map<int, std::size_t> generator_degrees(const Ideal<PrimeField>& I) {
  std::map<int, std::size_t> c;
  for (const auto& g : minimal_generators(I)) c[g.degree()]++;
  return c;
}
}  // namespace

TEST(Idealize, Roos4) {
  auto I = build(parse_family_ref("roos4"), kFp);
  auto res = idealize(I);
  EXPECT_EQ(res.ideal.ring->nvars(), 8u);
  EXPECT_EQ(res.type, 4u);
  EXPECT_EQ(res.y_names, (std::vector<std::string>{"y_1", "y_2", "y_3", "y_4"}));
  EXPECT_EQ(res.ideal.generators.size(), 6u + 12u + 10u);
  for (std::size_t k = 0; k < res.tags.size(); ++k) {
    int ydeg = res.bidegrees[k].second;
    switch (res.tags[k]) {
      case GeneratorTag::from_ideal: EXPECT_EQ(ydeg, 0); break;
      case GeneratorTag::from_syzygy: EXPECT_EQ(ydeg, 1); break;
      case GeneratorTag::y_square: EXPECT_EQ(ydeg, 2); break;
    }
  }
  auto rep = verify_idealization(res, I);
  EXPECT_TRUE(rep.passed());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  EXPECT_EQ(rep.hf_Rt, (std::vector<std::size_t>{1, 8, 8, 1}));
  EXPECT_EQ(rep.codim_Rt, 8u);
  EXPECT_EQ(rep.reg_Rt, 3);
  EXPECT_TRUE(rep.quadratic);
  ASSERT_TRUE(rep.betti_Rt);
  EXPECT_EQ(regularity(*rep.betti_Rt), 3);
  ASSERT_NE(rep.find("codim-type-bound"), nullptr);
  EXPECT_EQ(rep.codim_R + rep.type_R, 8u);
}

TEST(Idealize, AlphaFamily) {
  for (int a : {2, 3}) {
    auto I = build(parse_family_ref("roos-alpha-" + std::to_string(a)), kFp);
    auto res = idealize(I);
    auto rep = verify_idealization(res, I);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
    EXPECT_EQ(rep.codim_Rt, 14u);
    EXPECT_EQ(rep.reg_Rt, 3);
    EXPECT_EQ(rep.hf_Rt, (std::vector<std::size_t>{1, 14, 14, 1}));
    EXPECT_TRUE(rep.quadratic);
  }
}

TEST(Idealize, CmM3) {
  auto I = build(parse_family_ref("cm-m3"), kFp);
  auto res = idealize(I);
  EXPECT_EQ(res.ideal.ring->nvars(), 20u);
  auto rep = verify_idealization(res, I);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  EXPECT_EQ(rep.hf_Rt, (std::vector<std::size_t>{1, 20, 28, 20, 1}));
  EXPECT_EQ(rep.reg_Rt, 4);
  EXPECT_TRUE(rep.quadratic);
  EXPECT_EQ(generator_degrees(res.ideal), (std::map<int, std::size_t>{{2, 182}}));
}

TEST(Idealize, StanleyIsNotQuadratic) {
  auto I = build(parse_family_ref("stanley"), kFp);
  auto res = idealize(I);
  auto rep = verify_idealization(res, I);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_EQ(rep.hf_Rt, (std::vector<std::size_t>{1, 13, 12, 13, 1}));
  EXPECT_FALSE(rep.quadratic);
  // the non-quadratic minimal generators are the quartics of (x,y,z)^4; none is cubic
  auto d = generator_degrees(res.ideal);
  EXPECT_EQ(d.count(3), 0u);
  EXPECT_EQ(d.at(4), 15u);
}

TEST(Idealize, RejectsNonLevel) {
  auto r = make_ring(kFp, {"x", "y"});
  EXPECT_THROW(idealize(parse_ideal({"x^2", "x*y", "y^4"}, r)), NotLevel);
}

TEST(Idealize, FreshNamesAvoidClash) {
  auto r = make_ring(kFp, {"y_1", "x"});
  auto res = idealize(parse_ideal({"y_1^2", "x^2"}, r));
  EXPECT_EQ(res.y_names, (std::vector<std::string>{"yy_1"}));
  auto rep = verify_idealization(res, parse_ideal({"y_1^2", "x^2"}, r));
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(Idealize, DimensionDoubles) {
  for (std::string n : {"roos4", "cm-m2", "ci-2-3"}) {
    auto I = build(parse_family_ref(n), kFp);
    auto res = idealize(I);
    EXPECT_EQ(quotient_algebra(res.ideal).dim(), 2 * quotient_algebra(I).dim()) << n;
  }
}

TEST(Split, TwoSyzygyDegrees) {
  for (int m : {2, 3}) {
    auto I = build(parse_family_ref("cm-m" + std::to_string(m)), kFp);
    auto s = bigraded_split_check(idealize(I), I);
    EXPECT_EQ(s.t2_R, m + 2);
    EXPECT_EQ(s.t2_Rt, m + 2);
    EXPECT_TRUE(s.holds);
  }
  auto I = build(parse_family_ref("roos4"), kFp);
  auto s = bigraded_split_check(idealize(I), I);
  EXPECT_EQ(s.t2_R, 4);
  EXPECT_GE(s.t2_Rt, 4);
  EXPECT_THROW(bigraded_split_check(idealize(I), I, 10), InfeasibleSize);
}
