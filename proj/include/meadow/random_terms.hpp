#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "meadow/term.hpp"

namespace meadow {

/// Seeded generator of random terms over a signature.
class TermGenerator {
 public:
  TermGenerator(std::uint64_t seed, Signature sig, std::vector<std::string> vars)
      : rng_(seed), sig_(sig), vars_(std::move(vars)) {}

  /// A term of depth at most `max_depth` (a leaf has depth 1).
  Term term(std::size_t max_depth) {
    if (max_depth <= 1 || pick(4) == 0) return leaf();
    std::vector<Op> ops{Op::Add, Op::Mul, Op::Neg};
    if (admits_inv_md(sig_)) ops.push_back(Op::InvMd);
    if (admits_inv_nimd(sig_)) ops.push_back(Op::InvNimd);
    switch (ops[pick(ops.size())]) {
      case Op::Add: {
        Term l = term(max_depth - 1);
        return Term::add(std::move(l), term(max_depth - 1));
      }
      case Op::Mul: {
        Term l = term(max_depth - 1);
        return Term::mul(std::move(l), term(max_depth - 1));
      }
      case Op::Neg: return Term::neg(term(max_depth - 1));
      case Op::InvMd: return Term::inv_md(term(max_depth - 1));
      default: return Term::inv_nimd(term(max_depth - 1));
    }
  }

  Equation equation(std::size_t max_depth) {
    Term l = term(max_depth);
    return {std::move(l), term(max_depth)};
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Term leaf() {
    const std::size_t choices = 2 + vars_.size();
    const std::size_t c = pick(choices);
    if (c == 0) return Term::zero();
    if (c == 1) return Term::one();
    return Term::var(vars_[c - 2]);
  }

  std::mt19937_64 rng_;
  Signature sig_;
  std::vector<std::string> vars_;
};

/// `count` random equations over `sig`, depth <= `max_depth`, variables
/// drawn from {x, y} (or fewer when `num_vars` < 2).
inline std::vector<Equation> random_equation_corpus(std::uint64_t seed, std::size_t count,
                                                    std::size_t max_depth, std::size_t num_vars,
                                                    Signature sig) {
  std::vector<std::string> vars;
  const char* names[] = {"x", "y", "z", "u", "v", "w"};
  for (std::size_t i = 0; i < num_vars && i < 6; ++i) vars.emplace_back(names[i]);
  TermGenerator gen(seed, sig, std::move(vars));
  std::vector<Equation> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.equation(max_depth));
  return out;
}

}  // namespace meadow
