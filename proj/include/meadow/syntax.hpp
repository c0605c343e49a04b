#pragma once

// ASCII concrete syntax for terms and (conditional) formulas.
//
//   formula  := [atom {',' atom} '==>'] atom
//   atom     := term ('=' | '!=') term
//   term     := product {('+' | '-') product}
//   product  := unary {('*' | '/') unary}
//   unary    := '-' unary | postfix
//   postfix  := primary {'^-1' | '^~' | '^2'}
//   primary  := number | identifier | '(' term ')'
//
// `p - q` is read as `p + -q`, `p / q` as `p * q^-1` (or `q^~` when only
// the non-involutive inverse is available), `p^2` as `p * p`, and a decimal
// n >= 2 as the numeral ((0 + 1) + ...) + 1. `0` and `1` are the constants.

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "meadow/term.hpp"

namespace meadow {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class LexError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Largest decimal literal accepted; larger ones would build huge numerals.
inline constexpr std::size_t kMaxNumeralLiteral = 100000;

namespace detail {

enum class Tok {
  Ident, Number, Plus, Minus, Star, Slash, InvMd, InvNimd, Square,
  LParen, RParen, Eq, Neq, Implies, Comma, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    const std::size_t start = i;
    const char c = s[i];
    if (c >= 'a' && c <= 'z') {
      while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i])) ||
                              std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '+': single(Tok::Plus); continue;
      case '*': single(Tok::Star); continue;
      case '/': single(Tok::Slash); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '-': single(Tok::Minus); continue;
      default: break;
    }
    if (c == '=') {
      if (s.substr(i, 3) == "==>") {
        out.push_back({Tok::Implies, "==>", start});
        i += 3;
      } else {
        single(Tok::Eq);
      }
      continue;
    }
    if (c == '!' && s.substr(i, 2) == "!=") {
      out.push_back({Tok::Neq, "!=", start});
      i += 2;
      continue;
    }
    if (c == '^') {
      ++i;
      skip_ws();
      if (i < s.size() && s[i] == '~') {
        ++i;
        out.push_back({Tok::InvNimd, "^~", start});
        continue;
      }
      if (i < s.size() && s[i] == '2') {
        ++i;
        out.push_back({Tok::Square, "^2", start});
        continue;
      }
      if (i < s.size() && s[i] == '-') {
        ++i;
        skip_ws();
        if (i < s.size() && s[i] == '1') {
          ++i;
          out.push_back({Tok::InvMd, "^-1", start});
          continue;
        }
      }
      throw LexError("expected '^-1', '^~' or '^2'", start);
    }
    throw LexError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Signature sig) : toks_(lex(text)), sig_(sig) {}

  Formula formula() {
    std::vector<Atom> atoms{atom()};
    while (peek().kind == Tok::Comma) {
      next();
      atoms.push_back(atom());
    }
    if (peek().kind == Tok::Implies) {
      next();
      Atom concl = atom();
      expect_end();
      return Formula(std::move(atoms), std::move(concl));
    }
    if (atoms.size() != 1) throw ParseError("expected '==>' after antecedent list", peek().pos);
    expect_end();
    return Formula({}, std::move(atoms.front()));
  }

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
  }

  Atom atom() {
    Term l = term();
    Relation rel;
    if (peek().kind == Tok::Eq) {
      rel = Relation::Eq;
    } else if (peek().kind == Tok::Neq) {
      rel = Relation::Neq;
    } else {
      throw ParseError("expected '=' or '!='", peek().pos);
    }
    next();
    Term r = term();
    return Atom{std::move(l), std::move(r), rel};
  }

  Term term() {
    Term t = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Term r = product();
      t = Term::add(std::move(t), minus ? Term::neg(std::move(r)) : std::move(r));
    }
    return t;
  }

  Term product() {
    Term t = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      Term r = unary();
      if (op.kind == Tok::Slash) r = division_inverse(std::move(r), op.pos);
      t = Term::mul(std::move(t), std::move(r));
    }
    return t;
  }

  Term unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return Term::neg(unary());
    }
    return postfix();
  }

  Term postfix() {
    Term t = primary();
    while (true) {
      const Token& tk = peek();
      if (tk.kind == Tok::InvMd) {
        if (!admits_inv_md(sig_))
          throw SignatureError("'^-1' is not legal under signature " + std::string(to_string(sig_)) +
                               " at position " + std::to_string(tk.pos));
        next();
        t = Term::inv_md(std::move(t));
      } else if (tk.kind == Tok::InvNimd) {
        if (!admits_inv_nimd(sig_))
          throw SignatureError("'^~' is not legal under signature " + std::string(to_string(sig_)) +
                               " at position " + std::to_string(tk.pos));
        next();
        t = Term::inv_nimd(std::move(t));
      } else if (tk.kind == Tok::Square) {
        next();
        t = Term::mul(t, t);
      } else {
        return t;
      }
    }
  }

  Term primary() {
    const Token& tk = next();
    switch (tk.kind) {
      case Tok::Ident:
        return Term::var(tk.text);
      case Tok::Number: {
        if (tk.text.size() > 6 || std::stoul(tk.text) > kMaxNumeralLiteral)
          throw ParseError("numeral literal too large", tk.pos);
        const auto n = std::stoul(tk.text);
        if (n == 0) return Term::zero();
        if (n == 1) return Term::one();
        return numeral(n);
      }
      case Tok::LParen: {
        Term t = term();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        next();
        return t;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", tk.pos);
      default:
        throw ParseError("unexpected '" + tk.text + "'", tk.pos);
    }
  }

  Term division_inverse(Term t, std::size_t pos) {
    if (admits_inv_md(sig_)) return Term::inv_md(std::move(t));
    if (admits_inv_nimd(sig_)) return Term::inv_nimd(std::move(t));
    throw SignatureError("'/' needs an inverse symbol; signature cr has none at position " +
                         std::to_string(pos));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
};

// Binding strength for printing: higher binds tighter.
enum Level { kAdd = 1, kMul = 2, kUnary = 3, kPostfix = 4, kAtom = 5 };

inline int level(const Term& t) {
  switch (t.op()) {
    case Op::Add: return kAdd;
    case Op::Mul: return kMul;
    case Op::Neg: return kUnary;
    case Op::InvMd:
    case Op::InvNimd: return kPostfix;
    default: return kAtom;
  }
}

inline void print_to(const Term& t, std::string& out);

// Operands whose level is at most `max_paren` are parenthesized.
inline void print_operand(const Term& t, int max_paren, std::string& out) {
  if (level(t) <= max_paren) {
    out += '(';
    print_to(t, out);
    out += ')';
  } else {
    print_to(t, out);
  }
}

// Same-level operands of `+` and `*` are always parenthesized, so the stored
// association is visible in the text: numeral(2) prints as `(0 + 1) + 1`.
inline void print_to(const Term& t, std::string& out) {
  switch (t.op()) {
    case Op::Zero: out += '0'; return;
    case Op::One: out += '1'; return;
    case Op::Var: out += t.name(); return;
    case Op::Add:
      print_operand(t.left(), kAdd, out);
      if (t.right().op() == Op::Neg) {
        out += " - ";
        print_operand(t.right().left(), kAdd, out);
      } else {
        out += " + ";
        print_operand(t.right(), kAdd, out);
      }
      return;
    case Op::Mul:
      print_operand(t.left(), kMul, out);
      out += " * ";
      print_operand(t.right(), kMul, out);
      return;
    case Op::Neg:
      out += '-';
      print_operand(t.left(), kUnary, out);
      return;
    case Op::InvMd:
    case Op::InvNimd:
      // `(x^-1)^-1` rather than `x^-1^-1`
      print_operand(t.left(), t.left().is_inverse() ? kPostfix : kUnary, out);
      out += t.op() == Op::InvMd ? "^-1" : "^~";
      return;
  }
}

}  // namespace detail

inline Term parse_term(std::string_view text, Signature sig = Signature::MIXED) {
  return detail::Parser(text, sig).whole_term();
}

inline Formula parse_formula(std::string_view text, Signature sig = Signature::MIXED) {
  return detail::Parser(text, sig).formula();
}

/// Parses a plain equation; rejects guards and inequations.
inline Equation parse_equation(std::string_view text, Signature sig = Signature::MIXED) {
  Formula f = parse_formula(text, sig);
  if (!f.is_equation()) throw ParseError("expected a plain equation", 0);
  return f.as_equation();
}

inline std::string print(const Term& t) {
  std::string out;
  detail::print_to(t, out);
  return out;
}

inline std::string print(const Atom& a) {
  return print(a.lhs) + (a.rel == Relation::Eq ? " = " : " != ") + print(a.rhs);
}

inline std::string print(const Equation& e) { return print(e.lhs) + " = " + print(e.rhs); }

inline std::string print(const Formula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.antecedents.size(); ++i) {
    if (i) out += ", ";
    out += print(f.antecedents[i]);
  }
  if (!f.antecedents.empty()) out += " ==> ";
  out += print(f.conclusion);
  return out;
}

}  // namespace meadow
