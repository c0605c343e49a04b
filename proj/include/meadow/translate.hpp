#pragma once

// Translations between terms over the two inverse signatures, induced by
// the defining equation of each inverse:
//
//   to_md:   u^~  ->  u^-1 + n * (1 - u * u^-1)      (n = 1: no factor)
//   to_nimd: u^-1 ->  u * (u^~ * u^~)
//
// Both are homomorphic tree maps; no simplification is attempted.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "meadow/term.hpp"

namespace meadow {

enum class Direction { ToMd, ToNimd };

struct TranslationSpec {
  Direction direction = Direction::ToMd;
  std::size_t n = 1;
};

namespace detail {

inline Term one_minus(Term t) { return Term::add(Term::one(), Term::neg(std::move(t))); }

}  // namespace detail

inline Term to_md(const Term& t, std::size_t n = 1) {
  if (n == 0) throw std::invalid_argument("translation needs n >= 1");
  if (!t.legal_under(Signature::NIMD))
    throw SignatureError("to_md expects a term over nimd, got " + std::string(to_string(t.signature())));
  return map_bottom_up(t, [n](const Term& u) -> Term {
    if (u.op() != Op::InvNimd) return u;
    const Term& a = u.left();
    Term defect = detail::one_minus(Term::mul(a, Term::inv_md(a)));
    if (n != 1) defect = Term::mul(numeral(n), std::move(defect));
    return Term::add(Term::inv_md(a), std::move(defect));
  });
}

inline Term to_nimd(const Term& t) {
  if (!t.legal_under(Signature::MD))
    throw SignatureError("to_nimd expects a term over md, got " + std::string(to_string(t.signature())));
  return map_bottom_up(t, [](const Term& u) -> Term {
    if (u.op() != Op::InvMd) return u;
    const Term& a = u.left();
    return Term::mul(a, Term::mul(Term::inv_nimd(a), Term::inv_nimd(a)));
  });
}

namespace detail {

template <class F>
Formula map_formula(const Formula& f, F&& tr) {
  auto atom = [&](const Atom& a) { return Atom{tr(a.lhs), tr(a.rhs), a.rel}; };
  std::vector<Atom> ante;
  for (const auto& a : f.antecedents) ante.push_back(atom(a));
  return Formula(std::move(ante), atom(f.conclusion));
}

}  // namespace detail

inline Formula to_md(const Formula& f, std::size_t n = 1) {
  return detail::map_formula(f, [n](const Term& t) { return to_md(t, n); });
}

inline Formula to_nimd(const Formula& f) {
  return detail::map_formula(f, [](const Term& t) { return to_nimd(t); });
}

inline Equation to_md(const Equation& e, std::size_t n = 1) { return {to_md(e.lhs, n), to_md(e.rhs, n)}; }
inline Equation to_nimd(const Equation& e) { return {to_nimd(e.lhs), to_nimd(e.rhs)}; }

inline Term translate(const Term& t, const TranslationSpec& spec) {
  return spec.direction == Direction::ToMd ? to_md(t, spec.n) : to_nimd(t);
}

}  // namespace meadow
