#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meadow/checker.hpp"
#include "meadow/descriptor.hpp"

namespace meadow {

/// Finite model family for counterexample search.
struct FamilySpec {
  std::uint64_t pmax = 7;
  std::optional<std::vector<std::uint64_t>> ks;  // allowed inverses of zero; all k < p when empty
  bool products = false;                          // add prod(a,b) for base models a <= b
  std::optional<std::size_t> reto;                // add reto(m,n) for every meadow m so far
  bool invo = false;                              // add invo(m) for every non-involutive meadow m so far
  std::uint64_t cap = default_eval_cap();
};

struct Counterexample {
  std::string descriptor;
  Valuation witness;
};

struct SearchResult {
  std::optional<Counterexample> found;
  std::size_t models_checked = 0;
  std::size_t models_skipped = 0;  // wrong signature, failed precondition, or over the cap
};

/// Model descriptors of the family in search order: gf:p:k by increasing p
/// then k, then products, then reto wrappers, then invo wrappers.
inline std::vector<std::string> family_descriptors(const FamilySpec& fam) {
  std::vector<std::string> base;
  for (std::uint64_t p = 2; p <= fam.pmax; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t k = 0; k < p; ++k) {
      if (fam.ks) {
        bool allowed = false;
        for (auto a : *fam.ks) allowed = allowed || a == k;
        if (!allowed) continue;
      }
      base.push_back("gf:" + std::to_string(p) + ":" + std::to_string(k));
    }
  }
  std::vector<std::string> out = base;
  if (fam.products)
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i; j < base.size(); ++j)
        out.push_back("prod(" + base[i] + "," + base[j] + ")");
  const std::size_t plain = out.size();
  if (fam.reto)
    for (std::size_t i = 0; i < plain; ++i)
      out.push_back("reto(" + out[i] + "," + std::to_string(*fam.reto) + ")");
  if (fam.invo)
    for (std::size_t i = 0; i < plain; ++i) out.push_back("invo(" + out[i] + ")");
  return out;
}

/// First model and valuation in family order that violate `f`.
inline SearchResult find_counterexample(const Formula& f, const FamilySpec& fam) {
  SearchResult res;
  const Signature needed = f.signature();
  for (const auto& d : family_descriptors(fam)) {
    Model m;
    try {
      m = parse_model(d, Precondition::Check);
    } catch (const PreconditionError&) {
      ++res.models_skipped;
      continue;
    }
    if (!signature_includes(m.signature, needed)) {
      ++res.models_skipped;
      continue;
    }
    CheckReport r;
    try {
      r = holds_exhaustive(m, f, fam.cap);
    } catch (const EvaluationCapExceeded&) {
      ++res.models_skipped;
      continue;
    }
    ++res.models_checked;
    if (!r.holds()) {
      res.found = Counterexample{d, *r.witness};
      return res;
    }
  }
  return res;
}

inline nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j;
  if (r.found) {
    j["model"] = r.found->descriptor;
    j["witness"] = to_json(r.found->witness);
  } else {
    j["model"] = nullptr;
    j["witness"] = nullptr;
  }
  j["models_checked"] = r.models_checked;
  j["models_skipped"] = r.models_skipped;
  return j;
}

}  // namespace meadow
