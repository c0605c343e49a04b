#pragma once

// Concrete total algebras: totalized rational and prime fields, finite
// products, and the two inverse-redefining transformations between
// zero-totalized meadows and n-based non-involutive meadows.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meadow/element.hpp"
#include "meadow/term.hpp"
#include "meadow/util.hpp"

namespace meadow {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using UnaryOp = std::function<Element(const Element&)>;
using BinaryOp = std::function<Element(const Element&, const Element&)>;

/// A total algebra. `inv_md` is set iff the signature admits `^-1`,
/// `inv_nimd` iff it admits `^~`.
struct Model {
  std::string name;
  Signature signature = Signature::CR;

  Element zero;
  Element one;
  BinaryOp add;
  BinaryOp mul;
  UnaryOp neg;
  UnaryOp inv_md;
  UnaryOp inv_nimd;

  /// Finite carrier, each element listed once. Empty optional for
  /// infinite carriers.
  std::optional<std::vector<Element>> elements;
  /// Draws a random carrier element.
  std::function<Element(std::mt19937_64&)> sample;
  /// Values forced into every sampled batch.
  std::vector<Element> distinguished;
  /// Reads an element literal; nullopt when the text is not one.
  std::function<std::optional<Element>(std::string_view)> read;

  bool finite() const { return elements.has_value(); }
  std::size_t cardinality() const { return elements ? elements->size() : 0; }

  /// The element denoted by numeral(n).
  Element numeral_value(std::size_t n) const {
    Element e = zero;
    for (std::size_t i = 0; i < n; ++i) e = add(e, one);
    return e;
  }
};

/// Bound on numerators and denominators of sampled rationals.
inline constexpr std::int64_t kDefaultRationalBound = 100;

namespace detail {

inline void append_unique(std::vector<Element>& v, const Element& e) {
  for (const auto& x : v)
    if (x == e) return;
  v.push_back(e);
}

inline std::optional<BigInt> read_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return std::nullopt;
  BigInt v(std::string(s.substr(i)));
  return s.front() == '-' ? BigInt(-v) : v;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace detail

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// x^e mod p by square-and-multiply.
inline std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  x %= p;
  while (e) {
    if (e & 1) result = detail::mul_mod(result, x, p);
    x = detail::mul_mod(x, x, p);
    e >>= 1;
  }
  return result;
}

/// Field inverse of a nonzero residue, x^(p-2) mod p.
inline std::uint64_t inverse_mod_prime(std::uint64_t x, std::uint64_t p) {
  if (x % p == 0) throw std::domain_error("zero has no field inverse");
  return pow_mod(x, p - 2, p);
}

/// The rationals with the inverse of zero fixed to `n`.
///
/// Under MD the `^-1` operation is n-totalized, under NIMD the `^~`
/// operation is. Under MIXED `^-1` is zero-totalized and `^~` is
/// n-totalized, so formulas mixing both inverses can be checked in one
/// model.
inline Model rational_totalized(Signature sig, std::int64_t n,
                                std::int64_t bound = kDefaultRationalBound) {
  if (sig == Signature::CR) throw ModelError("rational_totalized needs an inverse symbol");
  if (bound < 1) throw ModelError("sampling bound must be positive");
  Model m;
  m.name = "rat:" + std::to_string(n);
  m.signature = sig;
  m.zero = Rational(0);
  m.one = Rational(1);
  m.add = [](const Element& a, const Element& b) { return Element(a.rational() + b.rational()); };
  m.mul = [](const Element& a, const Element& b) { return Element(a.rational() * b.rational()); };
  m.neg = [](const Element& a) { return Element(Rational(-a.rational())); };
  auto totalized = [](Rational at_zero) {
    return [at_zero](const Element& a) {
      const Rational& q = a.rational();
      return q == 0 ? Element(at_zero) : Element(Rational(1) / q);
    };
  };
  if (sig == Signature::MD) m.inv_md = totalized(Rational(n));
  if (sig == Signature::NIMD) m.inv_nimd = totalized(Rational(n));
  if (sig == Signature::MIXED) {
    m.inv_md = totalized(Rational(0));
    m.inv_nimd = totalized(Rational(n));
  }
  m.sample = [bound](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den(1, 2 * bound);
    const std::int64_t d = den(rng);
    // maps [1, 2B] onto [-B, B] \ {0}
    const std::int64_t signed_den = d <= bound ? d : bound - d;
    return Element(make_rational(num(rng), signed_den));
  };
  for (std::int64_t v : {std::int64_t{0}, std::int64_t{1}, std::int64_t{-1}, n})
    detail::append_unique(m.distinguished, Element(Rational(v)));
  m.read = [](std::string_view s) -> std::optional<Element> {
    s = detail::trim(s);
    const auto slash = s.find('/');
    auto num = detail::read_integer(s.substr(0, slash));
    if (!num) return std::nullopt;
    if (slash == std::string_view::npos) return Element(Rational(*num));
    auto den = detail::read_integer(s.substr(slash + 1));
    if (!den || *den == 0) return std::nullopt;
    return Element(make_rational(*num, *den));
  };
  return m;
}

/// Z/pZ with the inverse of zero fixed to `k`; nonzero inverses by
/// exponentiation. Signature handling matches rational_totalized.
inline Model gf_totalized(std::uint64_t p, std::uint64_t k, Signature sig) {
  if (!is_prime(p)) throw ModelError(std::to_string(p) + " is not prime");
  if (p > 0xffffffffULL) throw ModelError("modulus too large");
  if (k >= p) throw ModelError("inverse of zero must be below the modulus");
  if (sig == Signature::CR) throw ModelError("gf_totalized needs an inverse symbol");
  Model m;
  m.name = "gf:" + std::to_string(p) + ":" + std::to_string(k);
  m.signature = sig;
  m.zero = Residue{0, p};
  m.one = Residue{1 % p, p};
  m.add = [p](const Element& a, const Element& b) {
    return Element(Residue{(a.residue().value + b.residue().value) % p, p});
  };
  m.mul = [p](const Element& a, const Element& b) {
    return Element(Residue{detail::mul_mod(a.residue().value, b.residue().value, p), p});
  };
  m.neg = [p](const Element& a) { return Element(Residue{(p - a.residue().value) % p, p}); };
  auto totalized = [p](std::uint64_t at_zero) {
    return [p, at_zero](const Element& a) {
      const std::uint64_t v = a.residue().value;
      return Element(Residue{v == 0 ? at_zero : inverse_mod_prime(v, p), p});
    };
  };
  if (sig == Signature::MD) m.inv_md = totalized(k);
  if (sig == Signature::NIMD) m.inv_nimd = totalized(k);
  if (sig == Signature::MIXED) {
    m.inv_md = totalized(0);
    m.inv_nimd = totalized(k);
  }
  m.elements.emplace();
  for (std::uint64_t v = 0; v < p; ++v) m.elements->push_back(Residue{v, p});
  m.sample = [p](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    return Element(Residue{d(rng), p});
  };
  for (std::uint64_t v : {std::uint64_t{0}, 1 % p, (p - 1) % p, k})
    detail::append_unique(m.distinguished, Element(Residue{v, p}));
  m.read = [p](std::string_view s) -> std::optional<Element> {
    auto v = detail::read_integer(s);
    if (!v) return std::nullopt;
    BigInt r = *v % BigInt(p);
    if (r < 0) r += p;
    return Element(Residue{r.convert_to<std::uint64_t>(), p});
  };
  return m;
}

/// Returns `m` over MIXED with the absent inverse symbol denoting the
/// present inverse operation. Used for plain field descriptors, so that
/// `gf:3:1` answers both `^-1` and `^~` with its 1-totalized inverse.
inline Model identify_inverses(Model m) {
  if (m.signature == Signature::MD) {
    m.inv_nimd = m.inv_md;
  } else if (m.signature == Signature::NIMD) {
    m.inv_md = m.inv_nimd;
  } else if (m.signature == Signature::CR) {
    throw ModelError("model has no inverse to identify");
  }
  m.signature = Signature::MIXED;
  return m;
}

/// Componentwise direct product.
inline Model product(const Model& a, const Model& b) {
  if (a.signature != b.signature)
    throw ModelError("product of models over different signatures: " + a.name + ", " + b.name);
  Model m;
  m.name = "prod(" + a.name + "," + b.name + ")";
  m.signature = a.signature;
  m.zero = Element(a.zero, b.zero);
  m.one = Element(a.one, b.one);
  m.add = [fa = a.add, fb = b.add](const Element& x, const Element& y) {
    return Element(fa(x.first(), y.first()), fb(x.second(), y.second()));
  };
  m.mul = [fa = a.mul, fb = b.mul](const Element& x, const Element& y) {
    return Element(fa(x.first(), y.first()), fb(x.second(), y.second()));
  };
  auto lift = [](const UnaryOp& fa, const UnaryOp& fb) -> UnaryOp {
    if (!fa || !fb) return {};
    return [fa, fb](const Element& x) { return Element(fa(x.first()), fb(x.second())); };
  };
  m.neg = lift(a.neg, b.neg);
  m.inv_md = lift(a.inv_md, b.inv_md);
  m.inv_nimd = lift(a.inv_nimd, b.inv_nimd);
  if (a.finite() && b.finite()) {
    m.elements.emplace();
    for (const auto& x : *a.elements)
      for (const auto& y : *b.elements) m.elements->push_back(Element(x, y));
  }
  m.sample = [sa = a.sample, sb = b.sample](std::mt19937_64& rng) {
    Element x = sa(rng);
    return Element(std::move(x), sb(rng));
  };
  for (const auto& x : a.distinguished)
    for (const auto& y : b.distinguished) detail::append_unique(m.distinguished, Element(x, y));
  m.read = [ra = a.read, rb = b.read](std::string_view s) -> std::optional<Element> {
    s = detail::trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (s[i] == ',' && depth == 0) {
        auto x = ra(s.substr(0, i));
        auto y = rb(s.substr(i + 1));
        if (!x || !y) return std::nullopt;
        return Element(*x, *y);
      }
    }
    return std::nullopt;
  };
  return m;
}

/// Adds the non-involutive inverse defined from the zero-totalized one,
///   x^~ = x^-1 + n * (1 - x * x^-1),
/// keeping `^-1`. The result is over MIXED. Does not check that `a` is a
/// meadow; see `reto_checked` in descriptor.hpp.
inline Model retotalize(const Model& a, std::size_t n) {
  if (!a.inv_md) throw ModelError("retotalize needs a model with '^-1': " + a.name);
  if (n == 0) throw ModelError("retotalize needs n >= 1");
  Model m = a;
  m.name = "reto(" + a.name + "," + std::to_string(n) + ")";
  m.signature = Signature::MIXED;
  const Element nv = a.numeral_value(n);
  auto nimd = [inv = a.inv_md, add = a.add, mul = a.mul, neg = a.neg, one = a.one,
               nv](const Element& x) {
    const Element xi = inv(x);
    return add(xi, mul(nv, add(one, neg(mul(x, xi)))));
  };
  if (a.finite()) {
    // materialized table keyed by the printed element
    auto table = std::make_shared<std::map<std::string, Element>>();
    for (const auto& x : *a.elements) table->emplace(x.to_string(), nimd(x));
    m.inv_nimd = [table](const Element& x) { return table->at(x.to_string()); };
  } else {
    m.inv_nimd = nimd;
  }
  detail::append_unique(m.distinguished, m.inv_nimd(m.zero));
  return m;
}

/// Recovers a zero-totalized inverse from the non-involutive one,
///   x^-1 = x * (x^~ * x^~),
/// and drops `^~`. The result is over MD.
inline Model involutize(const Model& a) {
  if (!a.inv_nimd) throw ModelError("involutize needs a model with '^~': " + a.name);
  Model m = a;
  m.name = "invo(" + a.name + ")";
  m.signature = Signature::MD;
  auto md = [ni = a.inv_nimd, mul = a.mul](const Element& x) {
    const Element xi = ni(x);
    return mul(x, mul(xi, xi));
  };
  if (a.finite()) {
    auto table = std::make_shared<std::map<std::string, Element>>();
    for (const auto& x : *a.elements) table->emplace(x.to_string(), md(x));
    m.inv_md = [table](const Element& x) { return table->at(x.to_string()); };
  } else {
    m.inv_md = md;
  }
  m.inv_nimd = {};
  return m;
}

/// Index-based operation tables of a finite model.
struct OperationTables {
  std::size_t size = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::uint32_t> add;  // row-major size x size
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> inv_md;    // empty when absent
  std::vector<std::uint32_t> inv_nimd;  // empty when absent

  friend bool operator==(const OperationTables&, const OperationTables&) = default;
};

inline OperationTables tabulate(const Model& m) {
  if (!m.finite()) throw ModelError("cannot tabulate infinite model " + m.name);
  const auto& els = *m.elements;
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < els.size(); ++i)
    if (!index.emplace(els[i].to_string(), i).second)
      throw ModelError("duplicate carrier element in " + m.name);
  auto idx = [&](const Element& e) {
    auto it = index.find(e.to_string());
    if (it == index.end()) throw ModelError("operation leaves the carrier of " + m.name);
    return it->second;
  };
  OperationTables t;
  t.size = els.size();
  t.zero = idx(m.zero);
  t.one = idx(m.one);
  t.add.reserve(t.size * t.size);
  t.mul.reserve(t.size * t.size);
  for (const auto& x : els)
    for (const auto& y : els) {
      t.add.push_back(idx(m.add(x, y)));
      t.mul.push_back(idx(m.mul(x, y)));
    }
  for (const auto& x : els) {
    t.neg.push_back(idx(m.neg(x)));
    if (m.inv_md) t.inv_md.push_back(idx(m.inv_md(x)));
    if (m.inv_nimd) t.inv_nimd.push_back(idx(m.inv_nimd(x)));
  }
  return t;
}

/// Carrier and ring operations agree element-for-element, and so does
/// `^-1`. Both models must be finite and list their carriers in the same
/// order.
inline bool same_md_tables(const Model& a, const Model& b) {
  if (!a.finite() || !b.finite() || !a.inv_md || !b.inv_md) return false;
  if (a.cardinality() != b.cardinality()) return false;
  for (std::size_t i = 0; i < a.cardinality(); ++i)
    if (!((*a.elements)[i] == (*b.elements)[i])) return false;
  OperationTables ta = tabulate(a);
  OperationTables tb = tabulate(b);
  return ta.zero == tb.zero && ta.one == tb.one && ta.add == tb.add && ta.mul == tb.mul &&
         ta.neg == tb.neg && ta.inv_md == tb.inv_md;
}

}  // namespace meadow
