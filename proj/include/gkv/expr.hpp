#pragma once

// Tiny exact-rational expression evaluator for the table data file.
// Grammar: + - * / ^ ( ), integers, variables, gcd(a,b), binom(a,b),
// fact(a), prod(i, lo, hi, body). '/' is exact rational division; callers
// that require integers assert integrality of the final value.

#include "gkv/nat.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkv {

using ExprEnv = std::map<std::string, Nat>;

namespace expr_detail {

struct Token {
  enum Kind { Int, Ident, Op } kind;
  std::string text;
};

inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Token::Ident, s.substr(i, j - i)});
      i = j;
    } else if (std::string("+-*/^(),").find(c) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, c)});
      ++i;
    } else {
      throw std::invalid_argument("expr: bad character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

class Parser {
 public:
  Parser(const std::vector<Token>& t, const ExprEnv& env) : t_(t), env_(env) {}

  Rat parse() {
    Rat v = expr();
    if (i_ != t_.size()) throw std::invalid_argument("expr: trailing tokens");
    return v;
  }

 private:
  const Token& peek() const {
    static Token end{Token::Op, ""};
    return i_ < t_.size() ? t_[i_] : end;
  }
  Token eat() {
    if (i_ >= t_.size()) throw std::invalid_argument("expr: unexpected end of input");
    return t_[i_++];
  }
  void expect(const std::string& op) {
    if (peek().text != op) throw std::invalid_argument("expr: expected '" + op + "'");
    ++i_;
  }

  Rat expr() {
    Rat v = term();
    while (peek().text == "+" || peek().text == "-") {
      std::string op = eat().text;
      Rat w = term();
      if (op == "+")
        v = v + w;
      else
        v = v - w;
    }
    return v;
  }

  Rat term() {
    Rat v = factor();
    while (peek().text == "*" || peek().text == "/") {
      std::string op = eat().text;
      Rat w = factor();
      if (op == "*")
        v = v * w;
      else {
        if (w == 0) throw std::invalid_argument("expr: division by zero");
        v = v / w;
      }
    }
    return v;
  }

  Rat factor() {
    if (peek().text == "-") {
      ++i_;
      return -factor();
    }
    return power();
  }

  Rat power() {
    Rat v = atom();
    if (peek().text == "^") {
      ++i_;
      Rat e = factor();  // right associative
      Nat en = as_int(e, "exponent");
      if (en < 0) throw std::invalid_argument("expr: negative exponent");
      Rat r = 1;
      Rat b = v;
      Nat k = en;
      while (k > 0) {
        if (k % 2 == 1) r = r * b;
        b = b * b;
        k /= 2;
      }
      return r;
    }
    return v;
  }

  static Nat as_int(const Rat& v, const char* what) {
    if (boost::multiprecision::denominator(v) != 1)
      throw std::invalid_argument(std::string("expr: non-integer ") + what);
    return boost::multiprecision::numerator(v);
  }

  Rat atom() {
    Token t = eat();
    if (t.kind == Token::Int) return Rat(Nat(t.text));
    if (t.text == "(") {
      Rat v = expr();
      expect(")");
      return v;
    }
    if (t.kind == Token::Ident) {
      if (t.text == "gcd" || t.text == "binom") {
        expect("(");
        Nat a = as_int(expr(), "argument");
        expect(",");
        Nat b = as_int(expr(), "argument");
        expect(")");
        if (t.text == "gcd") return Rat(nat_gcd(a, b));
        // binomial coefficient
        if (b < 0 || b > a) return Rat(0);
        Nat num = 1, den = 1;
        for (Nat k = 0; k < b; ++k) {
          num *= a - k;
          den *= k + 1;
        }
        return Rat(num / den);
      }
      if (t.text == "fact") {
        expect("(");
        Nat a = as_int(expr(), "argument");
        expect(")");
        Nat r = 1;
        for (Nat k = 2; k <= a; ++k) r *= k;
        return Rat(r);
      }
      if (t.text == "prod") {
        expect("(");
        if (peek().kind != Token::Ident) throw std::invalid_argument("expr: prod variable");
        std::string var = eat().text;
        expect(",");
        Nat lo = as_int(expr(), "bound");
        expect(",");
        Nat hi = as_int(expr(), "bound");
        expect(",");
        // capture body tokens up to the matching ')'
        std::size_t start = i_;
        int depth = 0;
        while (i_ < t_.size()) {
          if (t_[i_].text == "(") ++depth;
          else if (t_[i_].text == ")") {
            if (depth == 0) break;
            --depth;
          }
          ++i_;
        }
        std::vector<Token> body(t_.begin() + start, t_.begin() + i_);
        expect(")");
        Rat acc = 1;
        for (Nat k = lo; k <= hi; ++k) {
          ExprEnv env2 = env_;
          env2[var] = k;
          Parser p(body, env2);
          acc = acc * p.parse();
        }
        return acc;
      }
      auto it = env_.find(t.text);
      if (it == env_.end())
        throw std::invalid_argument("expr: unbound variable '" + t.text + "'");
      return Rat(it->second);
    }
    throw std::invalid_argument("expr: unexpected token '" + t.text + "'");
  }

  const std::vector<Token>& t_;
  ExprEnv env_;
  std::size_t i_ = 0;
};

}  // namespace expr_detail

inline Rat eval_expr_rational(const std::string& s, const ExprEnv& env) {
  auto toks = expr_detail::tokenize(s);
  expr_detail::Parser p(toks, env);
  return p.parse();
}

inline Nat eval_expr(const std::string& s, const ExprEnv& env) {
  Rat v = eval_expr_rational(s, env);
  if (boost::multiprecision::denominator(v) != 1)
    throw std::invalid_argument("expr: expected integer value for '" + s + "'");
  return boost::multiprecision::numerator(v);
}

}  // namespace gkv
