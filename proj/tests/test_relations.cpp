#include <gtest/gtest.h>

#include "bezres/experiments.hpp"
#include "bezres/golden.hpp"
#include "bezres/json_io.hpp"
#include "bezres/parse.hpp"
#include "bezres/relations.hpp"
#include "oracles.hpp"

using namespace bezres;

namespace {

const CheckOutcome* find(const std::vector<CheckOutcome>& v, const std::string& name) {
  for (const auto& c : v) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TripleReport report(const char* f, const char* g) { return triple_report(parse_poly(f), parse_poly(g)); }

}  // namespace

TEST(TripleReport, Examples) {
  auto a = report("6x^2+5", "6x^2-4x+1");
  EXPECT_EQ(a.d, 6);
  EXPECT_EQ(a.B, 22);
  EXPECT_EQ(a.r, 11);
  EXPECT_EQ(a.R, 1056);
  auto b = report("2x^3-x^2-x", "x^3-x^2+x+1");
  EXPECT_EQ(b.d, 1);
  EXPECT_EQ(b.B, 2);
  EXPECT_EQ(b.r, 2);
  EXPECT_EQ(b.R, 2);
  auto c = report("2x^3+3x^2-2", "3x-3");
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.B, 9);
  EXPECT_EQ(c.r, 9);
  EXPECT_EQ(c.R, 81);
  EXPECT_THROW(report("x", "x"), NotCoprimeError);
  EXPECT_THROW(report("5", "x+1"), DegreeError);
}

TEST(TripleReport, GoldenExamplesAllChecksHold) {
  for (const auto& o : run_golden(golden_examples())) {
    EXPECT_TRUE(o.pass) << o.expected.f << " | " << o.expected.g;
  }
}

TEST(VerifyDivisibility, Examples) {
  auto t = report("6x^2+5", "6x^2-4x+1");
  auto out = verify_divisibility(t);
  for (const char* name : {"r_divides_B", "dB_divides_R", "R_divides_d^j_r^max"}) {
    const CheckOutcome* c = find(out, name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_TRUE(c->holds) << name;
  }

  auto t43 = report("2x^3+x^2-3x+2", "4x-2");
  EXPECT_EQ(t43.R, 64);
  EXPECT_EQ(t43.j, 3u);
  EXPECT_EQ(pow(t43.d, t43.j) * pow(t43.r, 3), 64);
  EXPECT_TRUE(find(verify_divisibility(t43), "R_divides_d^j_r^max")->holds);

  auto mon = report("x^2+x+1", "x+2");
  EXPECT_EQ(mon.R, 3);
  EXPECT_EQ(mon.r, 3);
  auto mout = verify_divisibility(mon);
  const CheckOutcome* active = find(mout, "monic_R_divides_r^min");
  ASSERT_NE(active, nullptr);
  EXPECT_TRUE(active->holds);
  EXPECT_EQ(find(verify_divisibility(t43), "monic_R_divides_r^min"), nullptr);
}

TEST(VerifyCorollaries, Examples) {
  auto t34 = report("6x^3-6x^2-6x-6", "6x^3-6x^2-6x+5");
  EXPECT_EQ(t34.d, 6);
  auto out = verify_corollaries(t34);
  ASSERT_NE(find(out, "d_gt1_implies_B_ne_R_and_r_ne_R"), nullptr);
  EXPECT_TRUE(find(out, "d_gt1_implies_B_ne_R_and_r_ne_R")->holds);
  EXPECT_TRUE(find(out, "same_primes_R_dr")->holds);
  EXPECT_TRUE(radical_equal(t34.R, t34.d * t34.r));

  auto t5 = report("2x^3-x^2-x", "x^3-x^2+x+1");
  auto out5 = verify_corollaries(t5);
  ASSERT_NE(find(out5, "d1_implies_B_eq_r"), nullptr);
  EXPECT_TRUE(find(out5, "d1_implies_B_eq_r")->holds);
  EXPECT_TRUE(find(out5, "d1_same_primes_B_r_R")->holds);
}

TEST(RadicalEqual, Examples) {
  EXPECT_TRUE(radical_equal(Integer(287496), Integer(66)));
  EXPECT_TRUE(radical_equal(Integer(12), Integer(18)));
  EXPECT_FALSE(radical_equal(Integer(1056), Integer(11)));
  EXPECT_TRUE(radical_equal(Integer(1), Integer(-1)));
  EXPECT_THROW(radical_equal(Integer(0), Integer(5)), Error);
}

TEST(RadicalEqual, AgreesWithTrialDivision) {
  for (std::uint64_t i = 0; i < 20000; ++i) {
    detail::CounterRng rng(61, i);
    const auto a = static_cast<std::uint64_t>(rng.uniform(1, 999999));
    std::uint64_t b = static_cast<std::uint64_t>(rng.uniform(1, 999999));
    if (i % 3 == 0) b = a * static_cast<std::uint64_t>(rng.uniform(1, 6)) % 1000000 + 1;
    if (i % 5 == 0) b = a;
    ASSERT_EQ(radical_equal(Integer(a), Integer(b)), oracle::support(a) == oracle::support(b)) << a << " " << b;
  }
  EXPECT_EQ(oracle::support(std::uint64_t{287496}), (std::set<std::uint64_t>{2, 3, 11}));
}

TEST(DegreeOneClosedForm, Examples) {
  auto a = degree_one_closed_form(parse_poly("2x"), parse_poly("2x+1"));
  EXPECT_EQ(a.B, 1);
  EXPECT_EQ(a.R, 2);
  auto b = degree_one_closed_form(parse_poly("x-1"), parse_poly("x+1"));
  EXPECT_EQ(b.B, 2);
  EXPECT_EQ(b.R, 2);
  auto c = degree_one_closed_form(parse_poly("3x+1"), parse_poly("3x+2"));
  EXPECT_EQ(c.B, 1);
  EXPECT_EQ(c.R, 3);
  EXPECT_THROW(degree_one_closed_form(parse_poly("x^2"), parse_poly("x+1")), DegreeError);
  EXPECT_THROW(degree_one_closed_form(parse_poly("x+1"), parse_poly("2x+2")), NotCoprimeError);
}

TEST(DegreeOneClosedForm, AgreesWithTripleReportUpToHeightFour) {
  PairStream s = enumerate_cell(1, 1, 4, Coprimality::no_common_root);
  while (auto p = s.next()) {
    auto cf = degree_one_closed_form(p->first, p->second);
    auto t = triple_report(p->first, p->second);
    ASSERT_EQ(cf.B, t.B);
    ASSERT_EQ(cf.R, t.R);
  }
}

TEST(Properties, ExhaustiveDegreeTwoHeightTwo) {
  CheckTally tally;
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 2; ++n) {
      PairStream s = enumerate_cell(m, n, 2, Coprimality::no_common_root);
      while (auto p = s.next()) {
        auto t = triple_report(p->first, p->second);
        tally.add(t, verify_all(t));
        EXPECT_EQ(t.B, oracle::bezout_B(t.f, t.g));
        EXPECT_TRUE(divides(t.B, pow(t.d, t.k_min) * t.r));
        if (t.k_min > 0) {
          EXPECT_FALSE(divides(t.B, pow(t.d, t.k_min - 1) * t.r));
        }
      }
    }
  }
  EXPECT_GT(tally.pairs, 1000u);
  EXPECT_EQ(tally.failed_checks(), 0u) << (tally.failures.empty() ? "" : tally.failures.front());
}

TEST(Properties, RandomPairsDegreeSixHeightTwenty) {
  CheckTally tally;
  for (std::uint64_t i = 0; i < 1500; ++i) {
    auto [f, g] = random_pair_up_to(6, 20, 62, i);
    auto t = triple_report(f, g);
    tally.add(t, verify_all(t));
    EXPECT_NO_THROW(require_all(verify_all(t), t));
  }
  EXPECT_EQ(tally.failed_checks(), 0u) << (tally.failures.empty() ? "" : tally.failures.front());
}

TEST(RequireAll, ThrowsWithDump) {
  auto t = report("6x^2+5", "6x^2-4x+1");
  std::vector<CheckOutcome> bad{{"synthetic", false, "forced"}};
  try {
    require_all(bad, t);
    FAIL() << "no throw";
  } catch (const TheoremViolation& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("synthetic"), std::string::npos);
    EXPECT_NE(what.find("6x^2 + 5"), std::string::npos);
  }
}

TEST(Json, RoundTripReproducesTriple) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto [f, g] = random_pair_up_to(5, 15, 63, i);
    auto t = triple_report(f, g);
    auto doc = nlohmann::json::parse(to_json(t).dump());
    auto back = triple_report(parse_any(doc["f"].get<std::string>()), parse_any(doc["g"].get<std::string>()));
    EXPECT_EQ(back.B.get_str(), doc["B"].get<std::string>());
    EXPECT_EQ(back.r.get_str(), doc["r"].get<std::string>());
    EXPECT_EQ(back.R.get_str(), doc["R"].get<std::string>());
    EXPECT_EQ(parse_poly(doc["bezout"]["Bp"].get<std::string>()), t.bezout.Bp);
    EXPECT_EQ(parse_poly(doc["reduced"]["p"].get<std::string>()) * f +
                  parse_poly(doc["reduced"]["q"].get<std::string>()) * g,
              IntPoly::constant(t.r));
  }
  auto doc = to_json(report("6x^2+5", "6x^2-4x+1"));
  for (const char* key : {"f", "g", "m", "n", "d", "B", "r", "R", "k_min", "j", "bezout", "resultant", "reduced"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  for (const char* key : {"p", "q", "Bp", "Bq"}) EXPECT_TRUE(doc["bezout"].contains(key)) << key;
  for (const char* key : {"pbar", "qbar", "sign"}) EXPECT_TRUE(doc["resultant"].contains(key)) << key;
}

TEST(Golden, TamperedExpectationFails) {
  auto ex = golden_examples();
  ex[1].r = 12;
  auto out = run_golden(ex);
  EXPECT_TRUE(out[0].pass);
  EXPECT_FALSE(out[1].pass);
}
