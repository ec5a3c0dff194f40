#include <gtest/gtest.h>

#include "bezres/experiments.hpp"
#include "bezres/parse.hpp"
#include "bezres/resultant.hpp"
#include "oracles.hpp"

using namespace bezres;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

TEST(Sylvester, Layout) {
  EXPECT_EQ(sylvester_matrix(parse_poly("x"), parse_poly("x+1")), from_rows({{1, 0}, {1, 1}}));
  IntMatrix s = sylvester_matrix(parse_poly("6x^2+5"), parse_poly("6x^2-4x+1"));
  EXPECT_EQ(s, from_rows({{6, 0, 5, 0}, {0, 6, 0, 5}, {6, -4, 1, 0}, {0, 6, -4, 1}}));
  EXPECT_EQ(bareiss_determinant(s), 1056);
  EXPECT_THROW(sylvester_matrix(parse_poly("3"), parse_poly("x")), DegreeError);
}

TEST(Bareiss, SmallMatrices) {
  EXPECT_EQ(bareiss_determinant(from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(bareiss_determinant(from_rows({{2, 3, 1}, {4, 6, 2}, {1, 0, 5}})), 0);
  EXPECT_EQ(bareiss_determinant(from_rows({{0, 0, 2}, {0, 3, 0}, {5, 0, 0}})), -30);
}

TEST(ResultantBareiss, Examples) {
  EXPECT_EQ(abs(resultant_bareiss(parse_poly("6x^3-6x^2-6x-6"), parse_poly("6x^3-6x^2-6x+5"))), 287496);
  EXPECT_EQ(resultant_bareiss(parse_poly("3"), parse_poly("x^2+1")), 9);
  EXPECT_EQ(resultant_bareiss(parse_poly("x^2+1"), parse_poly("3")), 9);
  EXPECT_EQ(abs(resultant_bareiss(parse_poly("2x^3+x^2-x-1"), parse_poly("x^3-x^2+x+1"))), 27);
  EXPECT_EQ(resultant_bareiss(parse_poly("x^2-1"), parse_poly("x-1")), 0);
  EXPECT_THROW(resultant_bareiss(parse_poly("3"), parse_poly("5")), Error);
  EXPECT_THROW(resultant_bareiss(IntPoly(), parse_poly("x")), Error);
}

TEST(ResultantPrs, Examples) {
  EXPECT_EQ(resultant_prs(parse_poly("x"), parse_poly("x+1")), 1);
  EXPECT_EQ(abs(resultant_prs(parse_poly("2x^3+3x^2-2"), parse_poly("3x-3"))), 81);
  EXPECT_EQ(resultant_prs(parse_poly("x^2-1"), parse_poly("x-1")), 0);
}

TEST(ResultantPrs, AgreesWithBareissAndOracle) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto [f, g] = random_pair_up_to(5, 10, 31, i);
    const Integer b = resultant_bareiss(f, g);
    EXPECT_EQ(resultant_prs(f, g), b) << f << " , " << g;
    EXPECT_EQ(oracle::resultant(f, g), b) << f << " , " << g;
  }
}

TEST(ResultantCertificate, Examples) {
  const IntPoly f = parse_poly("6x^2+5"), g = parse_poly("6x^2-4x+1");
  auto c = resultant_certificate(f, g);
  EXPECT_EQ(c.R, 1056);
  // d = gcd(6, 6)
  EXPECT_EQ(c.d, 6);
  EXPECT_TRUE(divides(Integer(2), content(c.pbar)));
  EXPECT_TRUE(divides(Integer(2), content(c.qbar)));
  EXPECT_TRUE(divides(c.d, content(c.pbar)));
  EXPECT_TRUE(certificate_holds(c, f, g));

  auto u = resultant_certificate(parse_poly("x"), parse_poly("x+1"));
  EXPECT_EQ(u.pbar, (IntPoly{-1}));
  EXPECT_EQ(u.qbar, (IntPoly{1}));
  EXPECT_EQ(u.R, 1);

  auto v = resultant_certificate(parse_poly("2x"), parse_poly("2x+1"));
  EXPECT_EQ(v.pbar, (IntPoly{-2}));
  EXPECT_EQ(v.qbar, (IntPoly{2}));
  EXPECT_EQ(v.R, 2);
  EXPECT_EQ(v.d, 2);

  EXPECT_THROW(resultant_certificate(parse_poly("x^2-1"), parse_poly("x-1")), NotCoprimeError);
  EXPECT_THROW(resultant_certificate(parse_poly("2"), parse_poly("x-1")), DegreeError);
}

TEST(ResultantCertificate, IdentityAndUniquenessOnRandomPairs) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto [f, g] = random_pair_up_to(5, 10, 32, i);
    auto c = resultant_certificate(f, g);
    EXPECT_EQ(c.pbar * f + c.qbar * g, IntPoly::constant(c.R));
    EXPECT_LT(c.pbar.degree(), g.degree());
    EXPECT_LT(c.qbar.degree(), f.degree());
    EXPECT_TRUE(certificate_holds(c, f, g));
    auto solved = oracle::solve_relation(f, g, Rational(c.R));
    ASSERT_TRUE(solved.has_value());
    EXPECT_EQ(solved->first, to_rational(c.pbar));
    EXPECT_EQ(solved->second, to_rational(c.qbar));
  }
}

TEST(ResultantIdentities, Examples) {
  auto r1 = check_resultant_identities(parse_poly("x"), parse_poly("x+1"), parse_poly("x^3+2"), Integer(2), IntPoly());
  ASSERT_TRUE(r1.swap_sign.holds.has_value());
  EXPECT_TRUE(*r1.swap_sign.holds);
  EXPECT_EQ(resultant_bareiss(parse_poly("x"), parse_poly("x+1")), 1);
  EXPECT_EQ(resultant_bareiss(parse_poly("x+1"), parse_poly("x")), -1);
  ASSERT_TRUE(r1.constant.holds.has_value());
  EXPECT_TRUE(*r1.constant.holds);
  EXPECT_EQ(resultant_bareiss(IntPoly::constant(2), parse_poly("x^3+2")), 8);

  const IntPoly h1 = parse_poly("x^2+1");
  auto r2 = check_resultant_identities(h1, IntPoly{1}, parse_poly("x^2+3"), Integer(3), parse_poly("x"));
  ASSERT_TRUE(r2.reduction.holds.has_value());
  EXPECT_TRUE(*r2.reduction.holds);
  EXPECT_EQ(resultant_bareiss(h1, parse_poly("x^3+x+1")), 1);
  EXPECT_TRUE(r2.none_failed());

  auto na = check_resultant_identities(parse_poly("3"), parse_poly("5"), IntPoly{7}, Integer(0), IntPoly());
  EXPECT_FALSE(na.swap_sign.holds.has_value());
  EXPECT_FALSE(na.constant.holds.has_value());
}

TEST(ResultantIdentities, RandomMultiplicativity) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    detail::CounterRng rng(33, i);
    auto poly = [&](int lo) {
      return detail::random_poly(rng, static_cast<int>(rng.uniform(lo, 4)), 9);
    };
    IntPoly h = poly(1), h1 = poly(1), h2 = poly(0), s = poly(0);
    auto rep = check_resultant_identities(h1, h2, h, Integer(rng.uniform(1, 9)), s);
    EXPECT_TRUE(rep.none_failed()) << h1 << " , " << h2 << " , " << h;
    ASSERT_TRUE(rep.multiplicative.holds.has_value());
  }
}
