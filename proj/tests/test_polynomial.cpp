#include <gtest/gtest.h>

#include <random>

#include "gor/polynomial.hpp"

using namespace gor;

namespace {

RingPtr<PrimeField> ring4() { return make_ring(PrimeField(32003), {"u", "x", "y", "z"}); }

Polynomial<PrimeField> P(const std::string& s, const RingPtr<PrimeField>& r) { return parse_polynomial(s, r); }

}  // namespace

TEST(Polynomial, MultiplyExamples) {
  auto r = make_ring(PrimeField(32003), {"x", "y"});
  EXPECT_EQ(P("(x+y)*(x-y)", r), P("x^2-y^2", r));
  EXPECT_EQ((P("x+y", r) * P("x-y", r)).to_string(), "x^2-y^2");
  EXPECT_TRUE((P("x+y", r) * P("0", r)).is_zero());

  auto s = make_ring(RationalField{}, {"x1", "x2", "x3", "x4"});
  auto l = parse_polynomial("x1+x2+x3+x4", s);
  auto sq = l * l;
  EXPECT_EQ(sq.size(), 10u);
  for (const auto& [m, c] : sq.terms()) {
    bool square = false;
    for (int i = 0; i < 4; ++i) square |= m[i] == 2;
    EXPECT_EQ(c, square ? 1 : 2);
  }
}

TEST(Polynomial, ParseExamples) {
  auto r = ring4();
  auto f = P("x^2+y*z+u^2", r);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_EQ(f.degree(), 2);
  EXPECT_TRUE(P("0", r).is_zero());
  auto s = make_ring(PrimeField(32003), {"u", "v", "w", "x", "y", "z"});
  auto g = parse_polynomial("x*z+3*z*w-u*w", s);
  EXPECT_EQ(g, parse_polynomial("-w*u+3*w*z+z*x", s));
  EXPECT_EQ(parse_polynomial("3/2*x", s), parse_polynomial("(3*x)/2", s));
}

TEST(Polynomial, ParseErrors) {
  auto r = ring4();
  EXPECT_THROW(P("x y", r), ParseError);
  EXPECT_THROW(P("2x", r), ParseError);
  EXPECT_THROW(P("x+", r), ParseError);
  EXPECT_THROW(P("(x+y", r), ParseError);
  EXPECT_THROW(P("", r), ParseError);
  EXPECT_THROW(P("x/0", r), ParseError);
  try {
    P("x+q", r);
    FAIL();
  } catch (const UnknownVariable& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    P("x*+y", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Polynomial, RingMismatch) {
  auto a = make_ring(PrimeField(32003), {"x", "y"});
  auto b = make_ring(PrimeField(32003), {"x", "z"});
  EXPECT_THROW(P("x", a) * P("x", b), RingMismatch);
  auto c = make_ring(PrimeField(32003), {"x", "y"});
  EXPECT_NO_THROW(P("x", a) * P("y", c));
}

TEST(Polynomial, RingValidation) {
  EXPECT_THROW(make_ring(PrimeField(7), {"x", "x"}), BadParameter);
  EXPECT_THROW(make_ring(PrimeField(7), {"1x"}), BadParameter);
  EXPECT_THROW(make_ring(PrimeField(7), std::vector<std::string>{}), BadParameter);
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("x" + std::to_string(i));
  EXPECT_THROW(make_ring(PrimeField(7), many), InfeasibleSize);
}

TEST(Monomial, ExponentOverflow) {
  Monomial m;
  m.set(0, 200);
  EXPECT_THROW(m * m, BadParameter);
}

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int maxe) {
  std::vector<int> e(n);
  for (auto& x : e) x = static_cast<int>(rng() % (maxe + 1));
  return Monomial(e);
}

}  // namespace

TEST(MonomialOrder, Axioms) {
  std::mt19937_64 rng(42);
  for (auto kind : {OrderKind::grevlex, OrderKind::lex, OrderKind::elimination}) {
    MonomialOrder ord{kind, 2};
    for (int t = 0; t < 2000; ++t) {
      auto a = random_monomial(rng, 5, 3), b = random_monomial(rng, 5, 3), c = random_monomial(rng, 5, 3);
      EXPECT_LE(ord.compare(Monomial{}, a), 0);
      int ab = ord.compare(a, b);
      EXPECT_EQ(ab, -ord.compare(b, a));
      EXPECT_EQ(ord.compare(a * c, b * c), ab);
      if (ab == 0) {
        EXPECT_EQ(a, b);
      }
      if (ab < 0 && ord.compare(b, c) < 0) {
        EXPECT_LT(ord.compare(a, c), 0);
      }
    }
  }
}

TEST(MonomialOrder, GrevlexSmall) {
  auto r = make_ring(PrimeField(7), {"x", "y", "z"});
  // x^2 > xy > y^2 > xz > yz > z^2
  auto mons = r->monomials_of_degree(2);
  std::vector<std::string> names;
  for (const auto& m : mons) names.push_back(r->monomial_string(m));
  EXPECT_EQ(names, (std::vector<std::string>{"z^2", "y*z", "x*z", "y^2", "x*y", "x^2"}));
}

TEST(Polynomial, PrintParseRoundTrip) {
  std::mt19937_64 rng(9);
  auto r = make_ring(PrimeField(32003), {"a", "b", "c", "d"});
  auto q = make_ring(RationalField{}, {"a", "b", "c", "d"});
  for (int t = 0; t < 300; ++t) {
    std::vector<Polynomial<PrimeField>::Term> terms;
    std::vector<Polynomial<RationalField>::Term> qterms;
    int k = static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      auto m = random_monomial(rng, 4, 3);
      long c = static_cast<long>(rng() % 41) - 20;
      terms.emplace_back(m, r->field().from_int(c));
      qterms.emplace_back(m, BigRational(c, static_cast<unsigned long>(rng() % 5 + 1)));
      qterms.back().second.canonicalize();
    }
    auto f = Polynomial<PrimeField>::from_terms(r, terms);
    EXPECT_EQ(parse_polynomial(f.to_string(), r), f) << f.to_string();
    auto g = Polynomial<RationalField>::from_terms(q, qterms);
    EXPECT_EQ(parse_polynomial(g.to_string(), q), g) << g.to_string();
  }
}

TEST(Polynomial, GradedMultiplication) {
  std::mt19937_64 rng(5);
  auto r = make_ring(PrimeField(32003), {"a", "b", "c"});
  for (int t = 0; t < 100; ++t) {
    auto mk = [&](int d) {
      std::vector<Polynomial<PrimeField>::Term> terms;
      auto mons = r->monomials_of_degree(d);
      for (const auto& m : mons)
        if (rng() % 2) terms.emplace_back(m, r->field().from_int(static_cast<long long>(rng() % 9) + 1));
      return Polynomial<PrimeField>::from_terms(r, terms);
    };
    auto f = mk(2), g = mk(3);
    auto h = f * g;
    for (const auto& [m, c] : h.terms()) EXPECT_EQ(m.degree(), 5);
    EXPECT_TRUE(h.is_homogeneous());
  }
}

TEST(Ideal, RejectsInhomogeneous) {
  auto r = ring4();
  EXPECT_THROW(Ideal<PrimeField>(r, {P("x^2+y", r)}), BadParameter);
}
