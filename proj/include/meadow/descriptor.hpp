#pragma once

// Model descriptors shared by every CLI subcommand:
//
//   rat:<n>             rationals, 0 inverts to n
//   gf:<p>:<k>          Z/pZ, 0 inverts to k
//   prod(<d1>,<d2>)     direct product
//   reto(<d>,<n>)       adds x^~ = x^-1 + n * (1 - x * x^-1)
//   invo(<d>)           replaces ^-1 by x * (x^~ * x^~)
//
// Plain field descriptors answer both `^-1` and `^~` with their single
// totalized inverse; reto(...) keeps the base `^-1` next to the new `^~`.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "meadow/axioms.hpp"
#include "meadow/checker.hpp"
#include "meadow/models.hpp"

namespace meadow {

class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model failed the axioms a transformation requires of it.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Precondition { Check, Trust };

namespace detail {

inline void require_suite(const Model& m, const AxiomSuite& s, const char* what) {
  if (!m.finite()) return;  // sampleable carriers are trusted
  const SuiteReport rep = check_suite(m, s, {CheckMode::Exhaustive});
  for (const auto& [label, r] : rep.results)
    if (!r.holds())
      throw PreconditionError(m.name + " is not " + what + ": " + label + " fails at " +
                              witness_text(*r.witness));
}

}  // namespace detail

/// retotalize, after verifying exhaustively that a finite `a` is a meadow.
inline Model reto_checked(const Model& a, std::size_t n, Precondition pre = Precondition::Check) {
  if (pre == Precondition::Check) detail::require_suite(a, suite_md(), "a meadow");
  return retotalize(a, n);
}

/// involutize, after verifying that a finite `a` is a non-involutive meadow.
inline Model invo_checked(const Model& a, Precondition pre = Precondition::Check) {
  if (pre == Precondition::Check) detail::require_suite(a, suite_nimd(), "a non-involutive meadow");
  return involutize(a);
}

namespace detail {

class DescriptorParser {
 public:
  DescriptorParser(std::string_view s, Precondition pre) : s_(s), pre_(pre) {}

  Model parse() {
    Model m = model();
    skip_ws();
    if (i_ != s_.size()) fail("trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DescriptorError("bad model descriptor '" + std::string(s_) + "': " + why + " at " +
                          std::to_string(i_));
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(std::string_view lit) {
    skip_ws();
    if (s_.substr(i_, lit.size()) == lit) {
      i_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::uint64_t number() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) fail("expected a number");
    if (i_ - start > 9) fail("number too large");
    return std::stoull(std::string(s_.substr(start, i_ - start)));
  }

  Model model() {
    try {
      if (accept("rat:")) {
        const auto n = static_cast<std::int64_t>(number());
        return identify_inverses(rational_totalized(Signature::MD, n));
      }
      if (accept("gf:")) {
        const auto p = number();
        expect(":");
        const auto k = number();
        return identify_inverses(gf_totalized(p, k, Signature::MD));
      }
      if (accept("prod(")) {
        Model a = model();
        expect(",");
        Model b = model();
        expect(")");
        return product(a, b);
      }
      if (accept("reto(")) {
        Model a = model();
        expect(",");
        const auto n = number();
        expect(")");
        if (n == 0) fail("reto needs n >= 1");
        return reto_checked(a, n, pre_);
      }
      if (accept("invo(")) {
        Model a = model();
        expect(")");
        return invo_checked(a, pre_);
      }
    } catch (const ModelError& e) {
      fail(e.what());
    }
    fail("expected rat:, gf:, prod(, reto( or invo(");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  Precondition pre_;
};

}  // namespace detail

inline Model parse_model(std::string_view descriptor, Precondition pre = Precondition::Check) {
  return detail::DescriptorParser(descriptor, pre).parse();
}

}  // namespace meadow
