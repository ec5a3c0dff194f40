#include <gtest/gtest.h>

#include "bezres/experiments.hpp"
#include "bezres/parse.hpp"
#include "bezres/poly.hpp"

using namespace bezres;

TEST(DegreeLeading, Examples) {
  auto a = degree_leading(IntPoly{6, 0, 5});
  EXPECT_EQ(a.degree, 2);
  EXPECT_EQ(a.leading, 6);
  auto b = degree_leading(IntPoly::constant(7));
  EXPECT_EQ(b.degree, 0);
  EXPECT_EQ(b.leading, 7);
  auto z = degree_leading(IntPoly());
  EXPECT_EQ(z.degree, kZeroDegree);
  EXPECT_EQ(z.leading, 0);
  EXPECT_LT(z.degree, 0);
}

TEST(ContentHeight, Examples) {
  auto a = content_height(IntPoly{6, -6, -6, -6});
  EXPECT_EQ(a.content, 6);
  EXPECT_EQ(a.height, 6);
  auto b = content_height(IntPoly{2, 1, -3, 2});
  EXPECT_EQ(b.content, 1);
  EXPECT_EQ(b.height, 3);
  auto z = content_height(IntPoly());
  EXPECT_EQ(z.content, 0);
  EXPECT_EQ(z.height, 0);
}

TEST(RingOps, Examples) {
  EXPECT_EQ((IntPoly{1, 1} * IntPoly{1, -1}), (IntPoly{1, 0, -1}));
  IntPoly d = IntPoly{1, 1, 0} - IntPoly{1, 0, 0};
  EXPECT_EQ(d, (IntPoly{1, 0}));
  EXPECT_EQ(d.degree(), 1);
  IntPoly s = IntPoly{2, 1};
  s *= Integer(3);
  EXPECT_EQ(s, (IntPoly{6, 3}));
  EXPECT_TRUE((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
  EXPECT_EQ((IntPoly{1, 2} * IntPoly()).degree(), kZeroDegree);
}

TEST(RingOps, ConstructorsNormalize) {
  EXPECT_EQ((IntPoly{0, 0, 3}).degree(), 0);
  EXPECT_EQ(IntPoly::from_low_first({Integer(1), Integer(0), Integer(0)}).degree(), 0);
  EXPECT_TRUE(IntPoly::constant(0).is_zero());
  EXPECT_EQ(IntPoly::monomial(Integer(5), 3), (IntPoly{5, 0, 0, 0}));
}

TEST(RatDivrem, Examples) {
  auto a = divrem(RatPoly{1, 0, -1}, RatPoly{1, -1});
  EXPECT_EQ(a.quot, (RatPoly{1, 1}));
  EXPECT_TRUE(a.rem.is_zero());
  auto b = divrem(RatPoly{1, 0, 0}, RatPoly{2, 0});
  EXPECT_EQ(b.quot, (RatPoly{Rational(1, 2), 0}));
  EXPECT_TRUE(b.rem.is_zero());
  auto c = divrem(RatPoly{1, 0}, RatPoly{1, 1});
  EXPECT_EQ(c.quot, (RatPoly{1}));
  EXPECT_EQ(c.rem, (RatPoly{-1}));
  EXPECT_THROW(divrem(RatPoly{1, 0}, RatPoly()), Error);
}

TEST(RatGcd, Examples) {
  EXPECT_EQ(rat_gcd(parse_poly("2x^3-x^2-x"), parse_poly("x^3-x^2+x+1")), (RatPoly{1}));
  EXPECT_EQ(rat_gcd(parse_poly("x^2-1"), parse_poly("x-1")), (RatPoly{1, -1}));
  EXPECT_EQ(rat_gcd(parse_poly("6x^2+5"), parse_poly("6x^2-4x+1")), (RatPoly{1}));
  EXPECT_EQ(rat_gcd(parse_poly("2x^2-2"), parse_poly("4x+4")), (RatPoly{1, 1}));
  EXPECT_THROW(rat_gcd(IntPoly(), IntPoly()), Error);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(IntPoly{1, 0, 1}, Rational(2)), 5);
  EXPECT_EQ(evaluate(IntPoly{7, -3, 4}, Rational(0)), 4);
  EXPECT_EQ(evaluate(IntPoly{6, -4, 1}, Rational(1, 2)), Rational(1, 2));
}

TEST(GcdZx, ContentTimesPrimitive) {
  EXPECT_EQ(gcd_zx(parse_poly("6x^2-6"), parse_poly("4x+4")), (IntPoly{2, 2}));
  EXPECT_EQ(gcd_zx(parse_poly("6x^2+5"), parse_poly("6x^2-4x+1")), (IntPoly{1}));
}

namespace {

IntPoly rand_poly(detail::CounterRng& rng, int max_deg, int H) {
  const int deg = static_cast<int>(rng.uniform(0, max_deg));
  std::vector<Integer> c;
  for (int k = 0; k <= deg; ++k) c.emplace_back(rng.uniform(-H, H));
  return IntPoly::from_low_first(c);
}

}  // namespace

TEST(Properties, RingAxiomsGaussAndDivrem) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    detail::CounterRng rng(99, i);
    IntPoly a = rand_poly(rng, 5, 30), b = rand_poly(rng, 5, 30), c = rand_poly(rng, 5, 30);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
      EXPECT_EQ(content(a * b), content(a) * content(b));
    }
    for (const IntPoly* p : {&a, &b, &c}) {
      if (!p->is_zero()) {
        EXPECT_NE(sgn(p->leading()), 0);
      }
    }
    if (!b.is_zero()) {
      auto qr = divrem(to_rational(a), to_rational(b));
      EXPECT_EQ(qr.quot * to_rational(b) + qr.rem, to_rational(a));
      EXPECT_LT(qr.rem.degree(), b.degree());
    }
    if (!a.is_zero() || !b.is_zero()) {
      RatPoly g = rat_gcd(a, b);
      EXPECT_EQ(g.leading(), 1);
      if (!a.is_zero()) {
        EXPECT_TRUE(divrem(to_rational(a), g).rem.is_zero());
      }
      if (!b.is_zero()) {
        EXPECT_TRUE(divrem(to_rational(b), g).rem.is_zero());
      }
    }
  }
}
