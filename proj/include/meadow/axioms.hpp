#pragma once

// Catalogued axiom suites. The formulas live in axioms/*.eqn, embedded into
// meadow/axiom_data.hpp at configure time and parsed on first use.
//
// File format: one `label: formula` per line; `#` starts a comment.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meadow/axiom_data.hpp"
#include "meadow/syntax.hpp"
#include "meadow/term.hpp"
#include "meadow/util.hpp"

namespace meadow {

struct LabeledFormula {
  std::string label;
  Formula formula;
};

struct AxiomSuite {
  std::string id;
  Signature signature = Signature::CR;
  std::vector<LabeledFormula> formulas;

  std::size_t size() const { return formulas.size(); }

  const Formula& at(std::string_view label) const {
    for (const auto& lf : formulas)
      if (lf.label == label) return lf.formula;
    throw std::out_of_range("no formula labelled '" + std::string(label) + "' in suite " + id);
  }

  bool contains(const Formula& f) const {
    for (const auto& lf : formulas)
      if (lf.formula == f) return true;
    return false;
  }
};

class SuiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses suite text. Labels must be unique and every formula must be
/// legal under `sig`.
inline AxiomSuite parse_suite(std::string_view text, std::string id, Signature sig) {
  AxiomSuite suite{std::move(id), sig, {}};
  std::set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0)
      throw SuiteError(suite.id + ":" + std::to_string(line_no) + ": expected 'label: formula'");
    std::string label(detail::trim(line.substr(0, colon)));
    if (!seen.insert(label).second)
      throw SuiteError(suite.id + ":" + std::to_string(line_no) + ": duplicate label " + label);
    try {
      suite.formulas.push_back({label, parse_formula(line.substr(colon + 1), sig)});
    } catch (const std::exception& e) {
      throw SuiteError(suite.id + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return suite;
}

namespace detail {

inline AxiomSuite load_file(std::string_view file, std::string id, Signature sig) {
  return parse_suite(embedded_axiom_file(file), std::move(id), sig);
}

inline AxiomSuite concat(std::string id, Signature sig, const AxiomSuite& a, const AxiomSuite& b) {
  AxiomSuite s{std::move(id), sig, a.formulas};
  s.formulas.insert(s.formulas.end(), b.formulas.begin(), b.formulas.end());
  return s;
}

// Replaces the schema variable `n` by numeral(n).
inline AxiomSuite instantiate_n(AxiomSuite s, std::size_t n) {
  const Binding b{{"n", numeral(n)}};
  for (auto& lf : s.formulas) lf.formula = subst(lf.formula, b);
  return s;
}

inline void require_positive(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
}

}  // namespace detail

/// The eight commutative ring axioms CR1-CR8.
inline AxiomSuite suite_cr() { return detail::load_file("cr.eqn", "cr", Signature::CR); }

/// Ring axioms plus Ref (2.1) and Ril (2.2).
inline AxiomSuite suite_md() {
  return detail::concat("md", Signature::MD, suite_cr(),
                        detail::load_file("md.eqn", "md", Signature::MD));
}

inline AxiomSuite suite_nimd1() {
  return detail::concat("nimd1", Signature::NIMD, suite_cr(),
                        detail::load_file("nimd1.eqn", "nimd1", Signature::NIMD));
}

inline AxiomSuite suite_nimd() {
  return detail::concat("nimd", Signature::NIMD, suite_cr(),
                        detail::load_file("nimd.eqn", "nimd", Signature::NIMD));
}

/// suite_nimd() plus `0^~ = numeral(n)`.
inline AxiomSuite suite_nimd_n(std::size_t n) {
  detail::require_positive(n);
  const std::string id = "nimd:" + std::to_string(n);
  auto extra = detail::instantiate_n(detail::load_file("nimd_n.eqn", id, Signature::NIMD), n);
  return detail::concat(id, Signature::NIMD, suite_nimd(), extra);
}

inline AxiomSuite derived_md() {
  return detail::load_file("derived_md.eqn", "derived-md", Signature::MD);
}

inline AxiomSuite derived_nimd1() {
  return detail::load_file("derived_nimd1.eqn", "derived-nimd1", Signature::NIMD);
}

inline AxiomSuite derived_nimd_n(std::size_t n) {
  detail::require_positive(n);
  return detail::instantiate_n(detail::load_file("derived_nimd_n.eqn",
                                                 "derived-nimd:" + std::to_string(n),
                                                 Signature::NIMD),
                               n);
}

/// Table of guarded formulas over MIXED: (4.1)-(4.6), Sep, Canc, Gil, Gil'.
inline AxiomSuite guarded_formulas() {
  return detail::load_file("guarded.eqn", "guarded", Signature::MIXED);
}

/// Defining equations of each inverse in terms of the other, and the
/// equation `x * x^~ = x * x^-1` (label L3). DefNiN is instantiated at `n`.
inline AxiomSuite defining_equations(std::size_t n = 1) {
  detail::require_positive(n);
  return detail::instantiate_n(detail::load_file("defs.eqn", "defs", Signature::MIXED), n);
}

/// `(1 + x^2 + y^2) * (1 + x^2 + y^2)^-1 = 1`, with `^~` for NIMD.
inline Equation extra_initiality_axiom(Signature sig) {
  const auto s = detail::load_file("initiality.eqn", "initiality", Signature::MIXED);
  switch (sig) {
    case Signature::MD:
    case Signature::MIXED:
      return s.at("md").as_equation();
    case Signature::NIMD:
      return s.at("nimd").as_equation();
    case Signature::CR:
      break;
  }
  throw SignatureError("signature cr has no inverse for the initiality axiom");
}

/// Suite by command-line id: cr, md, nimd1, nimd, nimd:<n>, derived-md,
/// derived-nimd1, derived-nimd:<n>, guarded, defs, defs:<n>.
inline AxiomSuite suite_by_id(std::string_view id) {
  auto with_n = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (id.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto digits = id.substr(prefix.size());
    if (digits.empty() || digits.size() > 6) throw SuiteError("bad suite id " + std::string(id));
    for (char c : digits)
      if (c < '0' || c > '9') throw SuiteError("bad suite id " + std::string(id));
    const auto n = std::stoul(std::string(digits));
    if (n == 0) throw SuiteError("suite " + std::string(id) + " needs n >= 1");
    return n;
  };
  if (id == "cr") return suite_cr();
  if (id == "md") return suite_md();
  if (id == "nimd1") return suite_nimd1();
  if (id == "nimd") return suite_nimd();
  if (id == "derived-md") return derived_md();
  if (id == "derived-nimd1") return derived_nimd1();
  if (id == "guarded") return guarded_formulas();
  if (id == "defs") return defining_equations(1);
  if (auto n = with_n("nimd:")) return suite_nimd_n(*n);
  if (auto n = with_n("derived-nimd:")) return derived_nimd_n(*n);
  if (auto n = with_n("defs:")) return defining_equations(*n);
  throw SuiteError("unknown suite " + std::string(id));
}

}  // namespace meadow
