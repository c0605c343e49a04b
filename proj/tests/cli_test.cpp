#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

Result meadow(const std::string& args) {
  const std::string cmd = std::string(MEADOW_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST(Eval, Examples) {
  EXPECT_EQ(meadow("eval --model rat:1 '0^~'").out, "1\n");
  EXPECT_EQ(meadow("eval --model gf:5:1 --assign x=2 'x^-1'").out, "3\n");
  EXPECT_EQ(meadow("eval --model rat:0 '1^-1'").out, "1\n");
  EXPECT_EQ(meadow("eval --model rat:0 --assign x=-4/6 'x^-1'").out, "-3/2\n");
  EXPECT_EQ(meadow("eval --model 'prod(gf:2:0,gf:3:0)' --assign 'x=(1,2)' 'x * x'").out, "(1,1)\n");
}

TEST(Eval, Errors) {
  EXPECT_EQ(meadow("eval --model rat:0 'x +'").code, 2);
  EXPECT_EQ(meadow("eval --model rat:0 'x + 1'").code, 3);
  EXPECT_EQ(meadow("eval --model nonsense '1'").code, 2);
  EXPECT_EQ(meadow("eval --model 'invo(gf:3:2)' '0^~'").code, 5);
  EXPECT_EQ(meadow("eval --model 'reto(gf:3:1,1)' '0^~'").code, 5);
  EXPECT_EQ(meadow("").code, 2);
}

TEST(Check, Examples) {
  const Result a = meadow("check --model gf:3:1 --exhaustive '(x^-1)^-1 = x'");
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, "FAILS\nwitness: x=0\nassignments: 1\n");
  const Result b = meadow("check --model rat:0 --trials 10000 --seed 7 'x*(x*x^-1) = x'");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out.substr(0, 14), "HOLDS_SAMPLED\n");
  const Result c = meadow("check --model 'reto(gf:5:0,1)' --exhaustive 'x^~ * (x^~)^~ = 1'");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "HOLDS_EXHAUSTIVE\nassignments: 5\n");
}

TEST(Check, ExhaustiveOnInfiniteModel) {
  EXPECT_EQ(meadow("check --model rat:0 --exhaustive 'x = x'").code, 4);
}

TEST(Check, SameSeedSameBytes) {
  const std::string args = "check --model rat:3 --trials 200 --seed 11 --json 'x * x^~ = 1'";
  const Result a = meadow(args);
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, meadow(args).out);
  EXPECT_NE(a.out.find("\"verdict\": \"FAILS\""), std::string::npos);
  EXPECT_NE(a.out.find("\"seed\": 11"), std::string::npos);
}

TEST(Check, CapFromEnvironment) {
  EXPECT_EQ(meadow("check --model gf:7:0 'x*(y*z) = (x*y)*z'").code, 0);
  EXPECT_EQ(::system((std::string("MEADOW_MAX_EVALS=10 ") + MEADOW_CLI +
                      " check --model gf:7:0 'x*(y*z) = (x*y)*z' >/dev/null 2>&1")
                         .c_str()) >> 8,
            4);
}

TEST(Axioms, ListMd) {
  const Result r = meadow("axioms md --list");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 10u);
  EXPECT_NE(r.out.find("(2.2): x * (x * x^-1) = x\n"), std::string::npos);
}

TEST(Axioms, CheckExamples) {
  const Result a = meadow("axioms nimd:3 --check --model gf:7:3 --mode exhaustive");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(lines(a.out), 14u);
  EXPECT_NE(a.out.find("all hold"), std::string::npos);
  const Result b = meadow("axioms nimd1 --check --model 'reto(gf:3:0,1)'");
  EXPECT_EQ(b.code, 0);
  const Result c = meadow("axioms md --check --model gf:3:1");
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.out.find("(2.1): FAILS x=0"), std::string::npos);
  EXPECT_EQ(meadow("axioms nope --list").code, 2);
}

TEST(Search, Examples) {
  EXPECT_EQ(meadow("search '(x^-1)^-1 = x' --family gf --pmax 7").out, "gf:2:1 x=0\n");
  EXPECT_EQ(meadow("search 'x*1 = x' --family gf --pmax 7").out, "none\n");
  EXPECT_EQ(meadow("search 'x^~*(x^~)^~ = 1' --family gf --pmax 5 --k 0").out, "gf:2:0 x=0\n");
}

TEST(Translate, Examples) {
  EXPECT_EQ(meadow("translate --to md --n 1 'x^~'").out, "x^-1 + (1 - x * x^-1)\n");
  EXPECT_EQ(meadow("translate --to nimd 'x^-1'").out, "x * (x^~ * x^~)\n");
  EXPECT_EQ(meadow("translate --to md --n 1 'x + 1'").out, "x + 1\n");
  EXPECT_EQ(meadow("translate --to md --n 2 '0^~'").out, "0^-1 + ((0 + 1) + 1) * (1 - 0 * 0^-1)\n");
  EXPECT_EQ(meadow("translate --to nimd 'x^~'").code, 5);
  EXPECT_EQ(meadow("translate --to ring 'x'").code, 2);
}

}  // namespace
