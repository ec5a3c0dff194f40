#include <gtest/gtest.h>

#include "bezres/bezout.hpp"
#include "bezres/experiments.hpp"
#include "bezres/parse.hpp"
#include "oracles.hpp"

using namespace bezres;

TEST(BezoutPair, Examples) {
  auto a = bezout_pair(parse_poly("x"), parse_poly("x+1"));
  EXPECT_EQ(a.p, (RatPoly{-1}));
  EXPECT_EQ(a.q, (RatPoly{1}));
  auto b = bezout_pair(parse_poly("2x"), parse_poly("2x+1"));
  EXPECT_EQ(b.p, (RatPoly{-1}));
  EXPECT_EQ(b.q, (RatPoly{1}));
  auto c = bezout_pair(parse_poly("6x^2+5"), parse_poly("6x^2-4x+1"));
  EXPECT_EQ(lcm(denominator_lcm(c.p), denominator_lcm(c.q)), 22);
  EXPECT_THROW(bezout_pair(parse_poly("x^2-1"), parse_poly("x-1")), NotCoprimeError);
  EXPECT_THROW(bezout_pair(parse_poly("x"), parse_poly("2")), DegreeError);
}

TEST(BezoutCertificate, Examples) {
  EXPECT_EQ(bezout_certificate(parse_poly("6x^3-6x^2-6x-6"), parse_poly("6x^3-6x^2-6x+5")).B, 11);
  EXPECT_EQ(bezout_certificate(parse_poly("2x^3+x^2-x-1"), parse_poly("x^3-x^2+x+1")).B, 3);
  const IntPoly f = parse_poly("x^2"), g = parse_poly("x+2");
  auto c = bezout_certificate(f, g);
  EXPECT_EQ(c.B, bezout_from_resultant(resultant_certificate(f, g)));
  EXPECT_EQ(c.B, 4);
  EXPECT_EQ(c.Bp * f + c.Bq * g, IntPoly::constant(c.B));
}

TEST(BezoutFromResultant, Examples) {
  auto c35 = resultant_certificate(parse_poly("6x^2+5"), parse_poly("6x^2-4x+1"));
  EXPECT_EQ(gcd(content(c35.pbar), content(c35.qbar)), 48);
  EXPECT_EQ(bezout_from_resultant(c35), 22);
  EXPECT_EQ(bezout_from_resultant(resultant_certificate(parse_poly("x"), parse_poly("x+1"))), 1);
  auto c5 = resultant_certificate(parse_poly("2x^3+x^2-x-1"), parse_poly("x^3-x^2+x+1"));
  EXPECT_EQ(gcd(content(c5.pbar), content(c5.qbar)), 9);
  EXPECT_EQ(bezout_from_resultant(c5), 3);
}

TEST(BezoutCertificate, InvariantsOnRandomPairs) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    auto [f, g] = random_pair_up_to(5, 10, 41, i);
    auto c = bezout_certificate(f, g);
    EXPECT_EQ(c.Bp * f + c.Bq * g, IntPoly::constant(c.B));
    EXPECT_EQ(c.p * to_rational(f) + c.q * to_rational(g), RatPoly{1});
    EXPECT_LT(c.p.degree(), g.degree());
    EXPECT_LT(c.q.degree(), f.degree());
    EXPECT_EQ(gcd(content(c.Bp), content(c.Bq)), 1);
    auto solved = oracle::solve_relation(f, g, Rational(1));
    ASSERT_TRUE(solved.has_value());
    EXPECT_EQ(solved->first, c.p);
    EXPECT_EQ(solved->second, c.q);
    EXPECT_EQ(oracle::bezout_B(f, g), c.B);
  }
}

TEST(BezoutFromResultant, CrossPathOnTenThousandPairs) {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    auto [f, g] = random_pair_up_to(5, 10, 42, i);
    ASSERT_EQ(bezout_from_resultant(resultant_certificate(f, g)), bezout_certificate(f, g).B) << f << " , " << g;
  }
}

TEST(ReduceRelation, BoundedInputIsUnchanged) {
  const IntPoly f = parse_poly("2x^3+x^2-3x+2"), g = parse_poly("4x-2");
  auto r = reduce_relation(IntPoly{2}, parse_poly("-x^2-x+1"), f, g, Integer(2));
  EXPECT_EQ(r.k, 0u);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.p_k, (IntPoly{2}));
  EXPECT_EQ(r.q_k, parse_poly("-x^2-x+1"));
}

TEST(ReduceRelation, InflatedRelationIsReduced) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto [f, g] = random_pair_up_to(4, 9, 43, i);
    auto c = bezout_certificate(f, g);
    const IntPoly x{1, 0};
    IntPoly p = c.Bp + g * x, q = c.Bq - f * x;
    const int k_bound = std::max(p.degree() - g.degree() + 1, 0);
    auto r = reduce_relation(p, q, f, g, c.B);
    const Integer d = gcd(f.leading(), g.leading());
    EXPECT_EQ(r.p_k * f + r.q_k * g, IntPoly::constant(r.value));
    EXPECT_EQ(r.value, pow(d, r.k) * c.B);
    EXPECT_LT(r.p_k.degree(), g.degree());
    EXPECT_LT(r.q_k.degree(), f.degree());
    EXPECT_LE(static_cast<int>(r.k), k_bound);
    EXPECT_LE(r.k, 2u);
  }
}

TEST(ReduceRelation, RejectsInvalidRelation) {
  EXPECT_THROW(reduce_relation(IntPoly{1}, IntPoly{1}, parse_poly("x"), parse_poly("x+1"), Integer(1)), RelationError);
  EXPECT_THROW(reduce_relation(IntPoly{-1}, IntPoly{1}, parse_poly("x"), parse_poly("x+1"), Integer(0)), RelationError);
}
