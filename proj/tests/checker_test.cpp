#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "meadow/meadow.hpp"
#include "test_support.hpp"

namespace meadow {
namespace {

using testing::res;

Formula f(const char* text) { return parse_formula(text); }

Element q(long n, long d = 1) { return Element(make_rational(n, d)); }

TEST(Eval, Examples) {
  EXPECT_EQ(eval(parse_model("rat:1"), parse_term("0^~"), {}), q(1));
  EXPECT_EQ(eval(parse_model("gf:5:1"), parse_term("x^-1"), {{"x", Element(res(2, 5))}}),
            Element(res(3, 5)));
  EXPECT_EQ(eval(parse_model("rat:0"), parse_term("1^-1"), {}), q(1));
  EXPECT_EQ(eval(parse_model("rat:0"), parse_term("x / y"), {{"x", q(1, 2)}, {"y", q(-3)}}), q(-1, 6));
}

TEST(Eval, UnboundVariable) {
  try {
    eval(parse_model("rat:0"), parse_term("x + y"), {{"x", q(1)}});
    FAIL();
  } catch (const UnboundVariable& e) {
    EXPECT_EQ(e.variable(), "y");
  }
}

TEST(Eval, MissingOperation) {
  const Model m = rational_totalized(Signature::MD, 0);
  EXPECT_THROW(eval(m, parse_term("0^~"), {}), SignatureError);
  EXPECT_THROW(check(m, f("x^~ = x")), SignatureError);
}

TEST(Exhaustive, RefFailsInOneTotalizedGF3) {
  const auto r = holds_exhaustive(parse_model("gf:3:1"), f("(x^-1)^-1 = x"));
  EXPECT_EQ(r.verdict, Verdict::Fails);
  EXPECT_EQ(witness_text(*r.witness), "x=0");
  EXPECT_EQ(r.assignments_tested, 1u);
}

TEST(Exhaustive, AxiomHoldsAfterRetotalizing) {
  const auto r = holds_exhaustive(parse_model("reto(gf:5:0,1)"), f("x^~ * (x^~)^~ = 1"));
  EXPECT_EQ(r.verdict, Verdict::HoldsExhaustive);
  EXPECT_EQ(r.assignments_tested, 5u);
  EXPECT_FALSE(r.witness);
}

TEST(Exhaustive, CountsAllAssignments) {
  const auto r = holds_exhaustive(parse_model("gf:7:0"), f("x*(y*z) = (x*y)*z"));
  EXPECT_EQ(r.assignments_tested, 343u);
  EXPECT_EQ(holds_exhaustive(parse_model("gf:7:0"), f("0 * 1 = 0")).assignments_tested, 1u);
}

TEST(Exhaustive, WitnessIsFirstInOdometerOrder) {
  // x varies fastest: (0,0), (1,0), (2,0), then (0,1) fails.
  const auto r = holds_exhaustive(parse_model("gf:3:0"), f("x + y = x"));
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(witness_text(*r.witness), "x=0, y=1");
  EXPECT_EQ(r.assignments_tested, 4u);
  const auto s = holds_exhaustive(parse_model("gf:2:0"), f("(1 + x^2 + y^2) * (1 + x^2 + y^2)^-1 = 1"));
  EXPECT_EQ(witness_text(*s.witness), "x=1, y=0");
}

TEST(Exhaustive, InfiniteAndCap) {
  EXPECT_THROW(holds_exhaustive(parse_model("rat:0"), f("x = x")), InfiniteCarrier);
  EXPECT_THROW(holds_exhaustive(parse_model("gf:7:0"), f("x*(y*z) = (x*y)*z"), 342),
               EvaluationCapExceeded);
  EXPECT_NO_THROW(holds_exhaustive(parse_model("gf:7:0"), f("x*(y*z) = (x*y)*z"), 343));
}

TEST(Exhaustive, CapFromEnvironment) {
  ::setenv("MEADOW_MAX_EVALS", "10", 1);
  EXPECT_EQ(default_eval_cap(), 10u);
  ::setenv("MEADOW_MAX_EVALS", "nonsense", 1);
  EXPECT_EQ(default_eval_cap(), kDefaultEvalCap);
  ::unsetenv("MEADOW_MAX_EVALS");
  EXPECT_EQ(default_eval_cap(), kDefaultEvalCap);
}

TEST(Conditional, GeneralInverseLawInFieldsNotProducts) {
  EXPECT_TRUE(holds_exhaustive(parse_model("gf:7:0"), f("x != 0 ==> x * x^-1 = 1")).holds());
  EXPECT_FALSE(holds_exhaustive(parse_model("prod(gf:2:0,gf:3:0)"), f("x != 0 ==> x * x^-1 = 1")).holds());
  EXPECT_TRUE(holds_exhaustive(parse_model("gf:5:0"), f("x != 0, x * y = x * z ==> y = z")).holds());
  EXPECT_FALSE(holds_exhaustive(parse_model("prod(gf:2:0,gf:2:0)"), f("0 != 1 ==> x = 0")).holds());
}

TEST(Conditional, VacuousWhenAntecedentFails) {
  const Model m = parse_model("gf:2:0");
  EXPECT_TRUE(satisfies(m, f("x != 0 ==> x = 0"), {{"x", Element(res(0, 2))}}));
  EXPECT_FALSE(satisfies(m, f("x != 0 ==> x = 0"), {{"x", Element(res(1, 2))}}));
  EXPECT_TRUE(satisfies(m, f("0 != 1"), {}));
}

TEST(Sampled, RilInRationals) {
  const auto r = holds_sampled(parse_model("rat:0"), f("x*(x*x^-1) = x"), 10000, 7);
  EXPECT_EQ(r.verdict, Verdict::HoldsSampled);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_GE(r.assignments_tested, 10000u);
}

TEST(Sampled, ForcedBatchFindsZeroWitness) {
  const auto r = holds_sampled(parse_model("rat:0"), f("x^-1*(x^-1)^-1 = 1"), 100, 0);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(witness_text(*r.witness), "x=0");
}

TEST(Sampled, DeterministicForSeed) {
  const Model m = parse_model("rat:0");
  // Same seed, same report bytes.
  const Formula g = f("x * x = x + 2");
  const auto a = to_json(holds_sampled(m, g, 500, 42)).dump();
  const auto b = to_json(holds_sampled(m, g, 500, 42)).dump();
  EXPECT_EQ(a, b);
  EXPECT_THROW(holds_sampled(m, g, 0, 1), std::invalid_argument);
}

TEST(Check, AutoPicksMode) {
  EXPECT_EQ(check(parse_model("gf:3:0"), f("x = x")).verdict, Verdict::HoldsExhaustive);
  EXPECT_EQ(check(parse_model("rat:0"), f("x = x")).verdict, Verdict::HoldsSampled);
  CheckOptions opt;
  opt.mode = CheckMode::Sampled;
  EXPECT_EQ(check(parse_model("gf:3:0"), f("x = x"), opt).verdict, Verdict::HoldsSampled);
}

TEST(Check, SignatureMismatch) {
  EXPECT_THROW(check(invo_checked(gf_totalized(3, 1, Signature::NIMD)), f("x^~ = x")), SignatureError);
}

TEST(Json, Schema) {
  const auto j = to_json(holds_exhaustive(parse_model("gf:3:1"), f("(x^-1)^-1 = x")));
  EXPECT_EQ(j["model"], "gf:3:1");
  EXPECT_EQ(j["verdict"], "FAILS");
  EXPECT_EQ(j["witness"]["x"], "0");
  EXPECT_EQ(j["assignments_tested"], 1);
  EXPECT_TRUE(j["seed"].is_null());
  const auto k = to_json(holds_sampled(parse_model("rat:0"), f("x = x"), 3, 9));
  EXPECT_TRUE(k["witness"].is_null());
  EXPECT_EQ(k["seed"], 9);
}

TEST(Suite, ReportsPerLabel) {
  const auto r = check_suite(parse_model("gf:3:1"), suite_md());
  EXPECT_FALSE(r.all_hold());
  EXPECT_FALSE(r.at("(2.1)").holds());
  EXPECT_TRUE(r.at("(2.2)").holds());
  EXPECT_TRUE(r.at("CR4").holds());
  EXPECT_EQ(r.results.size(), 10u);
}

TEST(Numeral, Invertibility) {
  EXPECT_TRUE(numeral_invertible(parse_model("gf:5:0"), 3));
  EXPECT_FALSE(numeral_invertible(parse_model("gf:3:0"), 3));
  EXPECT_FALSE(numeral_invertible(parse_model("prod(gf:2:0,gf:3:0)"), 2));
  EXPECT_TRUE(numeral_invertible(parse_model("prod(gf:5:0,gf:7:0)"), 3));
}

TEST(Transfer, NoDiscrepanciesOnSmallFields) {
  const auto corpus = random_equation_corpus(3, 40, 4, 2, Signature::NIMD);
  std::vector<Formula> formulas(corpus.begin(), corpus.end());
  for (const char* d : {"gf:2:0", "gf:3:0", "gf:5:0", "prod(gf:2:0,gf:3:0)"}) {
    const auto rep = transfer_check(parse_model(d), 1, formulas);
    EXPECT_EQ(rep.entries.size(), 40u);
    EXPECT_EQ(rep.discrepancies(), 0u) << d;
  }
  const auto rep = transfer_check(parse_model("gf:5:0"), 2, formulas);
  EXPECT_EQ(rep.discrepancies(), 0u);
}

TEST(Transfer, RejectsNonNimdFormula) {
  EXPECT_THROW(transfer_check(parse_model("gf:3:0"), 1, {f("x^-1 = x")}), SignatureError);
  EXPECT_THROW(transfer_check(parse_model("rat:0"), 1, {f("x = x")}), InfiniteCarrier);
}

// Oracle: the one-totalized field GF(p) computed by hand, independent of
// gf_totalized and retotalize.
TEST(Oracle, OneBasedAxiomsAgainstHandTables) {
  for (auto p : testing::primes_up_to(7)) {
    const Model m = retotalize(gf_totalized(p, 0, Signature::MD), 1);
    for (std::uint64_t x = 0; x < p; ++x) {
      const std::uint64_t expected = x == 0 ? 1 : *testing::inverse_by_search(x, p);
      EXPECT_EQ(eval(m, parse_term("x^~"), {{"x", Element(res(x, p))}}), Element(res(expected, p)));
    }
  }
}

TEST(Property, ProductIsComponentwise) {
  const Model a = parse_model("gf:3:0");
  const Model b = parse_model("gf:5:1");
  const Model m = product(a, b);
  TermGenerator gen(77, Signature::MIXED, {"x", "y"});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Term t = gen.term(5);
    Valuation va, vb, vm;
    for (const char* name : {"x", "y"}) {
      va[name] = a.sample(rng);
      vb[name] = b.sample(rng);
      vm[name] = Element(va[name], vb[name]);
    }
    EXPECT_EQ(eval(m, t, vm), Element(eval(a, t, va), eval(b, t, vb))) << print(t);
  }
}

TEST(Property, Lemma3AndTable4InMixedModels) {
  const Formula lemma3 = f("x * x^~ = x * x^-1");
  for (auto p : testing::primes_up_to(7)) {
    const Model m = retotalize(gf_totalized(p, 0, Signature::MD), 1);
    EXPECT_TRUE(holds_exhaustive(m, lemma3).holds());
    for (const auto& lf : guarded_formulas().formulas)
      EXPECT_TRUE(holds_exhaustive(m, lf.formula).holds()) << p << " " << lf.label;
  }
  CheckOptions opt;
  opt.trials = 2000;
  EXPECT_EQ(check(retotalize(rational_totalized(Signature::MD, 0), 1), lemma3, opt).verdict,
            Verdict::HoldsSampled);
}

TEST(Property, DerivedHoldWhereSuitesHold) {
  for (auto p : testing::primes_up_to(7))
    for (std::uint64_t k = 0; k < p; ++k) {
      const Model m = parse_model("gf:" + std::to_string(p) + ":" + std::to_string(k));
      if (check_suite(m, suite_md()).all_hold()) {
        EXPECT_TRUE(check_suite(m, derived_md()).all_hold());
      }
      if (check_suite(m, suite_nimd1()).all_hold()) {
        EXPECT_TRUE(check_suite(m, derived_nimd1()).all_hold());
      }
      for (std::size_t n = 1; n <= 5; ++n) {
        if (check_suite(m, suite_nimd_n(n)).all_hold()) {
          EXPECT_TRUE(check_suite(m, derived_nimd_n(n)).all_hold()) << m.name << " n=" << n;
        }
      }
    }
}

}  // namespace
}  // namespace meadow
