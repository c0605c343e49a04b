#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meadow {

/// Which inverse symbols a term may use.
///
/// CR has no inverse, MD has the zero-totalized inverse `^-1`, NIMD has the
/// totalized non-involutive inverse `^~`, MIXED has both.
enum class Signature { CR, MD, NIMD, MIXED };

inline bool admits_inv_md(Signature s) { return s == Signature::MD || s == Signature::MIXED; }
inline bool admits_inv_nimd(Signature s) { return s == Signature::NIMD || s == Signature::MIXED; }

/// True when every term legal under `inner` is legal under `outer`.
inline bool signature_includes(Signature outer, Signature inner) {
  return (!admits_inv_md(inner) || admits_inv_md(outer)) &&
         (!admits_inv_nimd(inner) || admits_inv_nimd(outer));
}

/// Smallest signature admitting both arguments.
inline Signature signature_join(Signature a, Signature b) {
  const bool md = admits_inv_md(a) || admits_inv_md(b);
  const bool nimd = admits_inv_nimd(a) || admits_inv_nimd(b);
  if (md && nimd) return Signature::MIXED;
  if (md) return Signature::MD;
  if (nimd) return Signature::NIMD;
  return Signature::CR;
}

inline std::string_view to_string(Signature s) {
  switch (s) {
    case Signature::CR: return "cr";
    case Signature::MD: return "md";
    case Signature::NIMD: return "nimd";
    case Signature::MIXED: return "mixed";
  }
  return "?";
}

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Op { Zero, One, Add, Mul, Neg, InvMd, InvNimd, Var };

/// Immutable term tree. Copies share structure.
class Term {
 public:
  static Term zero() { return Term(make(Op::Zero)); }
  static Term one() { return Term(make(Op::One)); }
  static Term var(std::string name) {
    auto n = make(Op::Var);
    n->name = std::move(name);
    return Term(std::move(n));
  }
  static Term add(Term l, Term r) { return binary(Op::Add, std::move(l), std::move(r)); }
  static Term mul(Term l, Term r) { return binary(Op::Mul, std::move(l), std::move(r)); }
  static Term neg(Term t) { return unary(Op::Neg, std::move(t)); }
  static Term inv_md(Term t) { return unary(Op::InvMd, std::move(t)); }
  static Term inv_nimd(Term t) { return unary(Op::InvNimd, std::move(t)); }

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  std::size_t arity() const { return node_->kids.size(); }
  const Term& child(std::size_t i) const { return node_->kids.at(i); }
  const Term& left() const { return node_->kids.at(0); }
  const Term& right() const { return node_->kids.at(1); }

  bool is_binary() const { return op() == Op::Add || op() == Op::Mul; }
  bool is_inverse() const { return op() == Op::InvMd || op() == Op::InvNimd; }

  /// Smallest signature under which this term is legal.
  Signature signature() const {
    Signature s = Signature::CR;
    if (op() == Op::InvMd) s = Signature::MD;
    if (op() == Op::InvNimd) s = Signature::NIMD;
    for (const auto& k : node_->kids) s = signature_join(s, k.signature());
    return s;
  }

  bool legal_under(Signature s) const { return signature_includes(s, signature()); }

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& k : node_->kids) n += k.size();
    return n;
  }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& k : node_->kids) d = std::max(d, k.depth());
    return d + 1;
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.name() != b.name() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (!(a.child(i) == b.child(i))) return false;
    return true;
  }

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Term> kids;
  };

  explicit Term(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<Node> make(Op op) {
    auto n = std::make_shared<Node>();
    n->op = op;
    return n;
  }
  static Term unary(Op op, Term t) {
    auto n = make(op);
    n->kids.push_back(std::move(t));
    return Term(std::move(n));
  }
  static Term binary(Op op, Term l, Term r) {
    auto n = make(op);
    n->kids.push_back(std::move(l));
    n->kids.push_back(std::move(r));
    return Term(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

enum class Relation { Eq, Neq };

/// `lhs = rhs` or `lhs != rhs`.
struct Atom {
  Term lhs;
  Term rhs;
  Relation rel = Relation::Eq;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Plain equation. Structural equality is syntactic.
struct Equation {
  Term lhs;
  Term rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// `a1, ..., ak ==> conclusion`; with no antecedents it is a plain
/// (in)equation. The conclusion may be an inequation so that the separation
/// axiom `0 != 1` fits the same shape.
struct Formula {
  std::vector<Atom> antecedents;
  Atom conclusion;

  Formula() : conclusion{Term::zero(), Term::zero(), Relation::Eq} {}
  Formula(std::vector<Atom> ante, Atom concl)
      : antecedents(std::move(ante)), conclusion(std::move(concl)) {}
  Formula(const Equation& e)  // NOLINT(google-explicit-constructor)
      : conclusion{e.lhs, e.rhs, Relation::Eq} {}

  bool is_equation() const { return antecedents.empty() && conclusion.rel == Relation::Eq; }
  Equation as_equation() const {
    if (!is_equation()) throw std::logic_error("formula is not a plain equation");
    return {conclusion.lhs, conclusion.rhs};
  }

  Signature signature() const {
    Signature s = signature_join(conclusion.lhs.signature(), conclusion.rhs.signature());
    for (const auto& a : antecedents)
      s = signature_join(s, signature_join(a.lhs.signature(), a.rhs.signature()));
    return s;
  }

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Numeral for n: 0 for n = 0, otherwise numeral(n-1) + 1.
inline Term numeral(std::size_t n) {
  Term t = Term::zero();
  for (std::size_t i = 0; i < n; ++i) t = Term::add(std::move(t), Term::one());
  return t;
}

namespace detail {
inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.op() == Op::Var) {
    out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) collect_vars(t.child(i), out);
}
}  // namespace detail

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  detail::collect_vars(t, out);
  return out;
}

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  for (const auto& a : f.antecedents) {
    detail::collect_vars(a.lhs, out);
    detail::collect_vars(a.rhs, out);
  }
  detail::collect_vars(f.conclusion.lhs, out);
  detail::collect_vars(f.conclusion.rhs, out);
  return out;
}

using Binding = std::map<std::string, Term>;

/// Rebuilds `t` bottom-up, applying `f` to each node once its children have
/// been rebuilt. Substitution and the inverse translations are built on it.
template <class F>
Term map_bottom_up(const Term& t, F&& f) {
  switch (t.op()) {
    case Op::Zero:
    case Op::One:
    case Op::Var:
      return f(t);
    case Op::Add:
    case Op::Mul: {
      Term l = map_bottom_up(t.left(), f);
      Term r = map_bottom_up(t.right(), f);
      Term rebuilt = t.op() == Op::Add ? Term::add(std::move(l), std::move(r))
                                       : Term::mul(std::move(l), std::move(r));
      return f(rebuilt);
    }
    case Op::Neg:
      return f(Term::neg(map_bottom_up(t.left(), f)));
    case Op::InvMd:
      return f(Term::inv_md(map_bottom_up(t.left(), f)));
    case Op::InvNimd:
      return f(Term::inv_nimd(map_bottom_up(t.left(), f)));
  }
  return t;
}

/// Simultaneous substitution. Throws SignatureError when a replacement uses
/// an inverse symbol the term's signature does not admit.
inline Term subst(const Term& t, const Binding& binding, Signature sig) {
  for (const auto& [name, repl] : binding)
    if (!repl.legal_under(sig))
      throw SignatureError("substitution for '" + name + "' is not legal under signature " +
                           std::string(to_string(sig)));
  return map_bottom_up(t, [&](const Term& n) -> Term {
    if (n.op() != Op::Var) return n;
    auto it = binding.find(n.name());
    return it == binding.end() ? n : it->second;
  });
}

inline Term subst(const Term& t, const Binding& binding) {
  Signature s = t.signature();
  for (const auto& [_, repl] : binding) s = signature_join(s, repl.signature());
  return subst(t, binding, s);
}

inline Formula subst(const Formula& f, const Binding& binding) {
  auto atom = [&](const Atom& a) { return Atom{subst(a.lhs, binding), subst(a.rhs, binding), a.rel}; };
  std::vector<Atom> ante;
  for (const auto& a : f.antecedents) ante.push_back(atom(a));
  return Formula(std::move(ante), atom(f.conclusion));
}

}  // namespace meadow
