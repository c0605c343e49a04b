#pragma once

// Evaluation of terms in models and satisfaction of (conditional) formulas,
// exhaustively over finite carriers or by seeded sampling.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "meadow/axioms.hpp"
#include "meadow/models.hpp"
#include "meadow/syntax.hpp"
#include "meadow/term.hpp"
#include "meadow/translate.hpp"

namespace meadow {

using Valuation = std::map<std::string, Element>;

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundVariable : public EvalError {
 public:
  explicit UnboundVariable(const std::string& name)
      : EvalError("unbound variable '" + name + "'"), name_(name) {}
  const std::string& variable() const { return name_; }

 private:
  std::string name_;
};

/// Exhaustive check requested on an infinite carrier.
class InfiniteCarrier : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive check would exceed the evaluation cap.
class EvaluationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEvalCap = 10'000'000;
/// Upper bound on the forced-value combinations prepended to a sampled run.
inline constexpr std::uint64_t kForcedBatchCap = 1024;

/// 10^7 unless MEADOW_MAX_EVALS holds a positive integer.
inline std::uint64_t default_eval_cap() {
  if (const char* env = std::getenv("MEADOW_MAX_EVALS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEvalCap;
}

enum class Verdict { HoldsExhaustive, HoldsSampled, Fails };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsExhaustive: return "HOLDS_EXHAUSTIVE";
    case Verdict::HoldsSampled: return "HOLDS_SAMPLED";
    case Verdict::Fails: return "FAILS";
  }
  return "?";
}

struct CheckReport {
  std::string model;
  Verdict verdict = Verdict::HoldsExhaustive;
  std::optional<Valuation> witness;  // present iff verdict == Fails
  std::uint64_t assignments_tested = 0;
  std::optional<std::uint64_t> seed;

  bool holds() const { return verdict != Verdict::Fails; }
};

inline void require_signature(const Model& m, Signature needed) {
  if (!signature_includes(m.signature, needed))
    throw SignatureError("model " + m.name + " (signature " + std::string(to_string(m.signature)) +
                         ") cannot interpret a " + std::string(to_string(needed)) + " formula");
}

/// Value of `t` in `m` under `v`. Total: the inverse of zero is whatever the
/// model says it is.
inline Element eval(const Model& m, const Term& t, const Valuation& v) {
  switch (t.op()) {
    case Op::Zero: return m.zero;
    case Op::One: return m.one;
    case Op::Var: {
      auto it = v.find(t.name());
      if (it == v.end()) throw UnboundVariable(t.name());
      return it->second;
    }
    case Op::Add: return m.add(eval(m, t.left(), v), eval(m, t.right(), v));
    case Op::Mul: return m.mul(eval(m, t.left(), v), eval(m, t.right(), v));
    case Op::Neg: return m.neg(eval(m, t.left(), v));
    case Op::InvMd:
      if (!m.inv_md) throw SignatureError("model " + m.name + " has no '^-1'");
      return m.inv_md(eval(m, t.left(), v));
    case Op::InvNimd:
      if (!m.inv_nimd) throw SignatureError("model " + m.name + " has no '^~'");
      return m.inv_nimd(eval(m, t.left(), v));
  }
  throw EvalError("bad term node");
}

inline bool holds_atom(const Model& m, const Atom& a, const Valuation& v) {
  const bool equal = eval(m, a.lhs, v) == eval(m, a.rhs, v);
  return a.rel == Relation::Eq ? equal : !equal;
}

/// Antecedents false means the formula holds vacuously.
inline bool satisfies(const Model& m, const Formula& f, const Valuation& v) {
  for (const auto& a : f.antecedents)
    if (!holds_atom(m, a, v)) return true;
  return holds_atom(m, f.conclusion, v);
}

namespace detail {

// Evaluates formulas over carrier indices using precomputed tables.
class TableEvaluator {
 public:
  TableEvaluator(const OperationTables& t, const std::vector<std::string>& vars) : t_(t) {
    for (std::size_t i = 0; i < vars.size(); ++i) slot_[vars[i]] = i;
  }

  std::uint32_t eval(const Term& term, const std::vector<std::uint32_t>& a) const {
    switch (term.op()) {
      case Op::Zero: return t_.zero;
      case Op::One: return t_.one;
      case Op::Var: return a[slot_.at(term.name())];
      case Op::Add: return t_.add[eval(term.left(), a) * t_.size + eval(term.right(), a)];
      case Op::Mul: return t_.mul[eval(term.left(), a) * t_.size + eval(term.right(), a)];
      case Op::Neg: return t_.neg[eval(term.left(), a)];
      case Op::InvMd: return t_.inv_md[eval(term.left(), a)];
      case Op::InvNimd: return t_.inv_nimd[eval(term.left(), a)];
    }
    return 0;
  }

  bool atom(const Atom& at, const std::vector<std::uint32_t>& a) const {
    const bool equal = eval(at.lhs, a) == eval(at.rhs, a);
    return at.rel == Relation::Eq ? equal : !equal;
  }

  bool satisfies(const Formula& f, const std::vector<std::uint32_t>& a) const {
    for (const auto& at : f.antecedents)
      if (!atom(at, a)) return true;
    return atom(f.conclusion, a);
  }

 private:
  const OperationTables& t_;
  std::map<std::string, std::size_t> slot_;
};

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > cap / base) return cap + 1;
    total *= base;
  }
  return total;
}

// Enumerates index vectors in odometer order, first variable fastest.
inline bool next_assignment(std::vector<std::uint32_t>& a, std::size_t radix) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (++a[i] < radix) return true;
    a[i] = 0;
  }
  return false;
}

inline CheckReport holds_exhaustive_tabulated(const Model& m, const OperationTables& tables,
                                              const Formula& f, std::uint64_t cap) {
  require_signature(m, f.signature());
  const auto var_set = free_vars(f);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const std::uint64_t total = checked_power(tables.size, vars.size(), cap);
  if (total > cap)
    throw EvaluationCapExceeded("exhaustive check in " + m.name + " needs " +
                                std::to_string(tables.size) + "^" + std::to_string(vars.size()) +
                                " assignments, cap is " + std::to_string(cap));
  TableEvaluator ev(tables, vars);
  CheckReport r;
  r.model = m.name;
  std::vector<std::uint32_t> a(vars.size(), 0);
  do {
    ++r.assignments_tested;
    if (!ev.satisfies(f, a)) {
      Valuation w;
      for (std::size_t i = 0; i < vars.size(); ++i) w[vars[i]] = (*m.elements)[a[i]];
      if (satisfies(m, f, w))
        throw std::logic_error("table and element evaluation disagree in " + m.name);
      r.verdict = Verdict::Fails;
      r.witness = std::move(w);
      return r;
    }
  } while (next_assignment(a, tables.size));
  r.verdict = Verdict::HoldsExhaustive;
  return r;
}

}  // namespace detail

/// Tries every assignment of carrier elements to the free variables, in
/// carrier order with the alphabetically first variable varying fastest; the
/// first violation is the witness.
inline CheckReport holds_exhaustive(const Model& m, const Formula& f,
                                    std::uint64_t cap = default_eval_cap()) {
  if (!m.finite()) throw InfiniteCarrier("model " + m.name + " has an infinite carrier");
  require_signature(m, f.signature());
  return detail::holds_exhaustive_tabulated(m, tabulate(m), f, cap);
}

/// Forced batch (every combination of the model's distinguished values, up
/// to kForcedBatchCap) followed by `trials` random valuations drawn with a
/// generator seeded by `seed`.
inline CheckReport holds_sampled(const Model& m, const Formula& f, std::uint64_t trials,
                                 std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  require_signature(m, f.signature());
  const auto var_set = free_vars(f);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  CheckReport r;
  r.model = m.name;
  r.seed = seed;
  auto fail = [&](Valuation w) {
    r.verdict = Verdict::Fails;
    r.witness = std::move(w);
    return r;
  };

  const auto& forced = m.distinguished;
  if (!forced.empty()) {
    std::vector<std::uint32_t> a(vars.size(), 0);
    std::uint64_t done = 0;
    do {
      Valuation v;
      for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = forced[a[i]];
      ++r.assignments_tested;
      if (!satisfies(m, f, v)) return fail(std::move(v));
    } while (++done < kForcedBatchCap && detail::next_assignment(a, forced.size()));
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Valuation v;
    for (const auto& name : vars) v[name] = m.sample(rng);
    ++r.assignments_tested;
    if (!satisfies(m, f, v)) return fail(std::move(v));
  }
  r.verdict = Verdict::HoldsSampled;
  return r;
}

enum class CheckMode { Auto, Exhaustive, Sampled };

struct CheckOptions {
  CheckMode mode = CheckMode::Auto;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t cap = default_eval_cap();
};

/// Auto is exhaustive on finite carriers and sampled otherwise.
inline CheckReport check(const Model& m, const Formula& f, const CheckOptions& opt = {}) {
  const bool exhaustive = opt.mode == CheckMode::Exhaustive ||
                          (opt.mode == CheckMode::Auto && m.finite());
  if (exhaustive) return holds_exhaustive(m, f, opt.cap);
  return holds_sampled(m, f, opt.trials, opt.seed);
}

struct SuiteReport {
  std::string suite;
  std::string model;
  std::vector<std::pair<std::string, CheckReport>> results;

  bool all_hold() const {
    for (const auto& [_, r] : results)
      if (!r.holds()) return false;
    return true;
  }

  const CheckReport& at(const std::string& label) const {
    for (const auto& [l, r] : results)
      if (l == label) return r;
    throw std::out_of_range("no report for " + label);
  }
};

inline SuiteReport check_suite(const Model& m, const AxiomSuite& s, const CheckOptions& opt = {}) {
  SuiteReport out{s.id, m.name, {}};
  const bool exhaustive = opt.mode == CheckMode::Exhaustive ||
                          (opt.mode == CheckMode::Auto && m.finite());
  if (exhaustive && !m.finite()) throw InfiniteCarrier("model " + m.name + " has an infinite carrier");
  std::optional<OperationTables> tables;
  if (exhaustive) tables = tabulate(m);
  for (const auto& lf : s.formulas) {
    out.results.emplace_back(lf.label, exhaustive
                                           ? detail::holds_exhaustive_tabulated(m, *tables, lf.formula, opt.cap)
                                           : holds_sampled(m, lf.formula, opt.trials, opt.seed));
  }
  return out;
}

/// numeral(n) has a multiplicative inverse in `m`, i.e. n * n^-1 = 1.
inline bool numeral_invertible(const Model& m, std::size_t n) {
  if (!m.inv_md) throw SignatureError("model " + m.name + " has no '^-1'");
  const Element nv = m.numeral_value(n);
  return m.mul(nv, m.inv_md(nv)) == m.one;
}

struct TransferEntry {
  Formula formula;     // over nimd
  Formula translated;  // over md
  Verdict retotalized_side;
  Verdict base_side;
  bool agree() const { return (retotalized_side == Verdict::Fails) == (base_side == Verdict::Fails); }
};

struct TransferReport {
  std::string model;
  std::size_t n = 1;
  std::vector<TransferEntry> entries;

  std::size_t discrepancies() const {
    std::size_t d = 0;
    for (const auto& e : entries) d += e.agree() ? 0 : 1;
    return d;
  }
};

/// For each formula over nimd, compares satisfaction in retotalize(a, n)
/// with satisfaction of its md translation in `a`. `a` must be a finite
/// model with `^-1`; meadow-ness is the caller's responsibility.
inline TransferReport transfer_check(const Model& a, std::size_t n, const std::vector<Formula>& corpus,
                                     std::uint64_t cap = default_eval_cap()) {
  if (!a.finite()) throw InfiniteCarrier("transfer_check needs a finite model, got " + a.name);
  const Model alpha = retotalize(a, n);
  const OperationTables base_tables = tabulate(a);
  const OperationTables alpha_tables = tabulate(alpha);
  TransferReport rep{a.name, n, {}};
  for (const auto& phi : corpus) {
    if (!signature_includes(Signature::NIMD, phi.signature()))
      throw SignatureError("transfer corpus formula is not over nimd: " + print(phi));
    Formula eps = to_md(phi, n);
    const Verdict left = detail::holds_exhaustive_tabulated(alpha, alpha_tables, phi, cap).verdict;
    const Verdict right = detail::holds_exhaustive_tabulated(a, base_tables, eps, cap).verdict;
    rep.entries.push_back({phi, std::move(eps), left, right});
  }
  return rep;
}

inline nlohmann::json to_json(const Valuation& v) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, e] : v) j[name] = e.to_string();
  return j;
}

/// {"model", "verdict", "witness", "assignments_tested", "seed"}
inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["model"] = r.model;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
  j["assignments_tested"] = r.assignments_tested;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  return j;
}

inline std::string witness_text(const Valuation& v) {
  std::string out;
  for (const auto& [name, e] : v) {
    if (!out.empty()) out += ", ";
    out += name + "=" + e.to_string();
  }
  return out;
}

}  // namespace meadow
