#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace meadow {

/// Exact rational; always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// num/den in lowest terms; the two-argument constructor rejects a negative
/// denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

/// Residue class modulo a prime; `value < modulus`.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Carrier value of one of the shipped models.
class Element {
 public:
  using Pair = std::pair<Element, Element>;

  Element() : v_(Rational(0)) {}
  Element(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Element(Residue r) : v_(r) {}              // NOLINT(google-explicit-constructor)
  Element(Element a, Element b)
      : v_(std::make_shared<const Pair>(std::move(a), std::move(b))) {}

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_residue() const { return std::holds_alternative<Residue>(v_); }
  bool is_pair() const { return std::holds_alternative<PairPtr>(v_); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const Residue& residue() const { return std::get<Residue>(v_); }
  const Element& first() const { return std::get<PairPtr>(v_)->first; }
  const Element& second() const { return std::get<PairPtr>(v_)->second; }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    if (a.is_residue()) return a.residue() == b.residue();
    return a.first() == b.first() && a.second() == b.second();
  }

  /// `3`, `-2/7`, `(0,2)`.
  std::string to_string() const {
    if (is_rational()) {
      const Rational& q = rational();
      const BigInt num = boost::multiprecision::numerator(q);
      const BigInt den = boost::multiprecision::denominator(q);
      if (den == 1) return num.str();
      return num.str() + "/" + den.str();
    }
    if (is_residue()) return std::to_string(residue().value);
    return "(" + first().to_string() + "," + second().to_string() + ")";
  }

 private:
  using PairPtr = std::shared_ptr<const Pair>;
  std::variant<Rational, Residue, PairPtr> v_;
};

}  // namespace meadow
