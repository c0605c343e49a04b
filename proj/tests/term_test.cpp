#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <string>

#include "meadow/random_terms.hpp"
#include "meadow/syntax.hpp"
#include "meadow/term.hpp"

namespace meadow {
namespace {

std::size_t count_ones(const Term& t) {
  std::size_t n = t.op() == Op::One ? 1 : 0;
  for (std::size_t i = 0; i < t.arity(); ++i) n += count_ones(t.child(i));
  return n;
}

TEST(Numeral, ZeroIsTheConstant) { EXPECT_EQ(numeral(0), Term::zero()); }

TEST(Numeral, OneIsZeroPlusOne) { EXPECT_EQ(numeral(1), Term::add(Term::zero(), Term::one())); }

TEST(Numeral, ThreeLeansLeft) {
  const Term expected = Term::add(
      Term::add(Term::add(Term::zero(), Term::one()), Term::one()), Term::one());
  EXPECT_EQ(numeral(3), expected);
}

TEST(Numeral, ContainsExactlyNOnes) {
  for (std::size_t n = 0; n < 40; ++n) EXPECT_EQ(count_ones(numeral(n)), n) << n;
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(parse_term("x * x^-1")), (std::set<std::string>{"x"}));
  EXPECT_TRUE(free_vars(parse_term("0 + 1")).empty());
  EXPECT_EQ(free_vars(parse_equation("(x^-1)^-1 = x").lhs), (std::set<std::string>{"x"}));
}

TEST(FreeVars, OfConditionalFormulaIncludesAntecedents) {
  EXPECT_EQ(free_vars(parse_formula("x != 0, y = z ==> 1 = 1")),
            (std::set<std::string>{"x", "y", "z"}));
}

TEST(Subst, Examples) {
  EXPECT_EQ(subst(parse_term("x + y"), {{"x", Term::one()}}), parse_term("1 + y"));
  EXPECT_EQ(subst(parse_term("x^-1"), {{"x", Term::zero()}}), parse_term("0^-1"));
  EXPECT_EQ(subst(parse_term("x"), {}), parse_term("x"));
}

TEST(Subst, IsSimultaneous) {
  const Term t = parse_term("x * y");
  EXPECT_EQ(subst(t, {{"x", Term::var("y")}, {"y", Term::var("x")}}), parse_term("y * x"));
}

TEST(Subst, RejectsIllegalReplacement) {
  const Term t = parse_term("x + 1", Signature::MD);
  EXPECT_THROW(subst(t, {{"x", parse_term("y^~")}}, Signature::MD), SignatureError);
  EXPECT_NO_THROW(subst(t, {{"x", parse_term("y^-1")}}, Signature::MD));
}

TEST(Signature, LegalityPredicate) {
  EXPECT_EQ(parse_term("x + 1").signature(), Signature::CR);
  EXPECT_EQ(parse_term("x^-1").signature(), Signature::MD);
  EXPECT_EQ(parse_term("x^~").signature(), Signature::NIMD);
  EXPECT_EQ(parse_term("x^~ * x^-1").signature(), Signature::MIXED);
  EXPECT_TRUE(parse_term("x^-1").legal_under(Signature::MIXED));
  EXPECT_FALSE(parse_term("x^-1").legal_under(Signature::NIMD));
  EXPECT_FALSE(parse_term("x^~").legal_under(Signature::CR));
}

TEST(StructuralEquality, IsSyntactic) {
  EXPECT_FALSE(parse_term("x + y") == parse_term("y + x"));
  EXPECT_FALSE(parse_term("(x + y) + z") == parse_term("x + (y + z)"));
  EXPECT_TRUE(parse_term("x - y") == parse_term("x + -y"));
}

TEST(SubstProperty, IdentityBindingIsIdentity) {
  TermGenerator gen(11, Signature::MIXED, {"x", "y", "z"});
  const Binding id{{"x", Term::var("x")}, {"y", Term::var("y")}, {"z", Term::var("z")}};
  for (int i = 0; i < 500; ++i) {
    const Term t = gen.term(6);
    EXPECT_EQ(subst(t, id), t) << print(t);
    EXPECT_EQ(subst(t, {}), t) << print(t);
  }
}

TEST(SubstProperty, ClosedReplacementRemovesVariable) {
  TermGenerator gen(12, Signature::MIXED, {"x", "y"});
  TermGenerator closed(13, Signature::MIXED, {});
  for (int i = 0; i < 500; ++i) {
    const Term t = gen.term(6);
    const Term c = closed.term(3);
    auto expected = free_vars(t);
    expected.erase("x");
    EXPECT_EQ(free_vars(subst(t, {{"x", c}})), expected) << print(t);
  }
}

}  // namespace
}  // namespace meadow
