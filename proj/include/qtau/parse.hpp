#pragma once

// Text grammar shared by all expression kinds:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' | '/' | <juxtaposition>) factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | identifier | '(' expr ')'
//           | 'q' '^' '{' linear '}'            (q-case parameter monomial)
//           | '[' linear ']' '_' ('q' | '{' 'q' '^' integer '}')   (q-number)
//   linear := integer combination of coroot symbols plus an integer
// Juxtaposition multiplies with the same precedence as '*' and '/', left to
// right, so "1/2 b1" is (1/2) b1. Division means right multiplication by an
// inverse.

#include "qtau/ncalg.hpp"
#include "qtau/weyl_realization.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace qtau {

struct Token {
  enum Kind { Number, Ident, Sym, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s);

// Index of a coroot symbol name in the datum, or -1.
int coroot_index(const RootDatum& rd, const std::string& name);

template <class Adapter>
class Parser {
 public:
  using Value = typename Adapter::Value;

  Parser(const Adapter& ad, const std::string& text) : ad_(ad), toks_(tokenize(text)) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek(int ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  bool is_sym(const char* s, int ahead = 0) const {
    return peek(ahead).kind == Token::Sym && peek(ahead).text == s;
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  void expect(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw InputError("parse error: " + msg); }

  Value expr() {
    bool neg = false;
    if (is_sym("+") || is_sym("-")) neg = next().text == "-";
    Value v = term();
    if (neg) v = ad_.neg(v);
    while (is_sym("+") || is_sym("-")) {
      bool minus = next().text == "-";
      Value t = term();
      v = minus ? ad_.sub(v, t) : ad_.add(v, t);
    }
    return v;
  }

  bool starts_factor() const {
    auto& t = peek();
    return t.kind == Token::Number || t.kind == Token::Ident || is_sym("(") || is_sym("[");
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (is_sym("*")) {
        ++pos_;
        v = ad_.mul(v, factor());
      } else if (is_sym("/")) {
        ++pos_;
        v = ad_.div(v, factor());
      } else if (starts_factor()) {
        v = ad_.mul(v, factor());
      } else {
        return v;
      }
    }
  }

  long integer() {
    bool neg = false;
    if (is_sym("-")) {
      neg = true;
      ++pos_;
    }
    if (peek().kind != Token::Number) fail("expected an integer");
    long v = std::stol(next().text);
    return neg ? -v : v;
  }

  // Integer combination of coroot symbols plus a constant.
  AffineCoroot linear(const char* close) {
    AffineCoroot out{ad_.datum().zero(), 0};
    bool first = true;
    while (!is_sym(close)) {
      long sign = 1;
      if (is_sym("+") || is_sym("-")) {
        sign = next().text == "-" ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-' in linear form");
      }
      first = false;
      long coef = 1;
      bool have_num = false;
      if (peek().kind == Token::Number) {
        coef = std::stol(next().text);
        have_num = true;
        if (is_sym("*")) ++pos_;
      }
      if (peek().kind == Token::Ident) {
        int k = coroot_index(ad_.datum(), peek().text);
        if (k < 0) fail("unknown coroot symbol '" + peek().text + "'");
        ++pos_;
        out.beta[k] += sign * coef;
      } else if (have_num) {
        out.n += sign * coef;
      } else {
        fail("malformed linear form");
      }
    }
    ++pos_;
    return out;
  }

  Value atom() {
    const Token& t = peek();
    if (t.kind == Token::Number) return ad_.number(Rational(next().text));
    if (is_sym("(")) {
      ++pos_;
      Value v = expr();
      expect(")");
      return v;
    }
    if (is_sym("[")) {
      ++pos_;
      AffineCoroot b = linear("]");
      expect("_");
      long d = 1;
      if (is_sym("{")) {
        ++pos_;
        if (peek().kind != Token::Ident || peek().text != "q") fail("expected q in q-number base");
        ++pos_;
        expect("^");
        d = integer();
        expect("}");
      } else if (peek().kind == Token::Ident && peek().text == "q") {
        ++pos_;
      } else {
        fail("expected _q after a q-number");
      }
      return ad_.qnum(b, d);
    }
    if (t.kind == Token::Ident) {
      std::string name = next().text;
      if (name == "q" && is_sym("^") && is_sym("{", 1)) {
        pos_ += 2;
        AffineCoroot g = linear("}");
        return ad_.qpow(g);
      }
      return ad_.ident(name);
    }
    fail(t.kind == Token::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  Value factor() {
    Value v = atom();
    if (is_sym("^") && !is_sym("{", 1)) {
      ++pos_;
      v = ad_.pow(v, integer());
    }
    return v;
  }

  const Adapter& ad_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Adapter for the parameter scalar rings.
template <class S>
struct ScalarAdapter {
  using Value = S;
  using Ops = ScalarOps<S>;
  const RootDatum& rd;
  const RootDatum& datum() const { return rd; }
  S number(const Rational& r) const { return S(r); }
  S ident(const std::string& name) const {
    if constexpr (Ops::quantum) {
      if (name == "q") return S(RatFun::q());
    } else {
      int k = coroot_index(rd, name);
      if (k >= 0) return ParamKM::var(k);
    }
    throw InputError("unknown symbol '" + name + "'");
  }
  S qpow(const AffineCoroot& g) const {
    if constexpr (Ops::quantum)
      return param_qpow(g, 1);
    else
      throw InputError("q^{...} is only available in the q-case");
  }
  S qnum(const AffineCoroot& b, long d) const {
    if constexpr (Ops::quantum)
      return param_qint(b, d);
    else
      throw InputError("q-numbers are only available in the q-case");
  }
  S add(const S& a, const S& b) const { return a + b; }
  S sub(const S& a, const S& b) const { return a - b; }
  S neg(const S& a) const { return S(0) - a; }
  S mul(const S& a, const S& b) const { return a * b; }
  S div(const S& a, const S& b) const { return a * Ops::inverse(b); }
  S pow(const S& a, long e) const {
    S base = e < 0 ? Ops::inverse(a) : a;
    S out(1);
    for (long k = 0; k < std::abs(e); ++k) out = out * base;
    return out;
  }
};

// Adapter for f-monomial realization elements.
template <class S>
struct FElemAdapter {
  using Value = FElem<S>;
  const FRealization<S>& r;
  const RootDatum& datum() const { return r.datum(); }
  ScalarAdapter<S> scalars() const { return {r.datum()}; }
  Value number(const Rational& c) const { return r.scalar(S(c)); }
  Value ident(const std::string& name) const {
    if (name.size() > 1 && name[0] == 'f')
      for (int i = 0; i < r.rank(); ++i)
        if (name.substr(1) == r.datum().labels[i]) return r.gen(i);
    return r.scalar(scalars().ident(name));
  }
  Value qpow(const AffineCoroot& g) const { return r.scalar(scalars().qpow(g)); }
  Value qnum(const AffineCoroot& b, long d) const { return r.scalar(scalars().qnum(b, d)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a * r.inverse(b); }
  Value pow(const Value& a, long e) const { return r.power(a, e); }
};

struct WeylAdapter {
  using Value = WeylElem;
  const WeylRealization& r;
  const RootDatum& datum() const { return r.datum(); }
  Value number(const Rational& c) const { return r.scalar(ParamKM(c)); }
  Value ident(const std::string& name) const {
    if (name == "x") return r.x();
    if (name == "d") return r.d();
    if (name.size() > 1 && name[0] == 'f')
      for (int i = 0; i < r.rank(); ++i)
        if (name.substr(1) == r.datum().labels[i]) return r.gen(i);
    return r.scalar(ScalarAdapter<ParamKM>{r.datum()}.ident(name));
  }
  Value qpow(const AffineCoroot&) const { throw InputError("q^{...} is not available here"); }
  Value qnum(const AffineCoroot&, long) const { throw InputError("q-numbers are not available here"); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a * r.inverse(b); }
  Value pow(const Value& a, long e) const { return r.power(a, e); }
};

template <class S>
S parse_scalar(const RootDatum& rd, const std::string& text) {
  ScalarAdapter<S> ad{rd};
  return Parser<ScalarAdapter<S>>(ad, text).parse();
}

template <class S>
FElem<S> parse_elem(const FRealization<S>& r, const std::string& text) {
  FElemAdapter<S> ad{r};
  return Parser<FElemAdapter<S>>(ad, text).parse();
}

inline WeylElem parse_elem(const WeylRealization& r, const std::string& text) {
  WeylAdapter ad{r};
  return Parser<WeylAdapter>(ad, text).parse();
}

}  // namespace qtau
