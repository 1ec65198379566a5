#include "eqsum4/expr.hpp"

#include <cctype>

namespace eqsum4 {

Expr::Expr(const Integer& c) : node_(std::make_shared<const Node>(Node{Kind::Constant, c, {}, 0, {}})) {}

Expr Expr::symbol(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Kind::Symbol, Integer(0), std::move(name), 0, {}}));
}

Expr Expr::binary(Kind k, const Expr& a, const Expr& b) {
  return Expr(std::make_shared<const Node>(Node{k, Integer(0), {}, 0, {a, b}}));
}

Expr Expr::operator-() const {
  return Expr(std::make_shared<const Node>(Node{Kind::Neg, Integer(0), {}, 0, {*this}}));
}

Expr Expr::pow(unsigned e) const {
  return Expr(std::make_shared<const Node>(Node{Kind::Pow, Integer(0), {}, e, {*this}}));
}

Expr Expr::bind(const std::map<std::string, Expr, std::less<>>& defs) const {
  switch (kind()) {
    case Kind::Constant:
      return *this;
    case Kind::Symbol: {
      auto it = defs.find(name());
      return it == defs.end() ? *this : it->second;
    }
    default: {
      Node n = *node_;
      for (auto& c : n.children) c = c.bind(defs);
      return Expr(std::make_shared<const Node>(std::move(n)));
    }
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  Expr sum() {
    Expr acc = signed_product();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++i_;
        acc = acc + signed_product();
      } else if (c == '-') {
        ++i_;
        acc = acc - signed_product();
      } else {
        return acc;
      }
    }
  }

  Expr signed_product() {
    char c = peek();
    if (c == '-') {
      ++i_;
      return -product();
    }
    if (c == '+') ++i_;
    return product();
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  Expr product() {
    Expr acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        acc = acc * power();
      } else if (starts_primary(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Expr power() {
    Expr base = primary();
    while (peek() == '^') {
      ++i_;
      bool braced = peek() == '{';
      if (braced) ++i_;
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) throw ParseError("expected exponent", i_);
      unsigned long e = std::stoul(std::string(s_.substr(start, i_ - start)));
      if (e > 0xFFFF) throw ParseError("exponent too large", start);
      if (braced) {
        if (peek() != '}') throw ParseError("expected '}'", i_);
        ++i_;
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Expr primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Expr e = sum();
      if (peek() != ')') throw ParseError("expected ')'", i_);
      ++i_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Expr(Integer::parse(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_++;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Expr::symbol(std::string(s_.substr(start, i_ - start)));
    }
    if (c == '\0') throw ParseError("unexpected end of expression", i_);
    throw ParseError(std::string("unexpected '") + c + "'", i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

MPoly poly_expand(const Expr& e) {
  using K = Expr::Kind;
  const auto& ch = e.children();
  switch (e.kind()) {
    case K::Constant:
      return MPoly(e.constant());
    case K::Symbol:
      return MPoly::variable(e.name());
    case K::Add:
      return poly_expand(ch[0]) + poly_expand(ch[1]);
    case K::Sub:
      return poly_expand(ch[0]) - poly_expand(ch[1]);
    case K::Mul:
      return poly_expand(ch[0]) * poly_expand(ch[1]);
    case K::Neg:
      return -poly_expand(ch[0]);
    case K::Pow:
      return poly_expand(ch[0]).pow(e.exponent());
  }
  throw std::logic_error("unknown expression kind");
}

Rational eval_expr(const Expr& e, const Assignment& values) {
  using K = Expr::Kind;
  const auto& ch = e.children();
  switch (e.kind()) {
    case K::Constant:
      return Rational(e.constant());
    case K::Symbol: {
      auto it = values.find(e.name());
      if (it == values.end()) throw MissingVariable(e.name());
      return it->second;
    }
    case K::Add:
      return eval_expr(ch[0], values) + eval_expr(ch[1], values);
    case K::Sub:
      return eval_expr(ch[0], values) - eval_expr(ch[1], values);
    case K::Mul:
      return eval_expr(ch[0], values) * eval_expr(ch[1], values);
    case K::Neg:
      return -eval_expr(ch[0], values);
    case K::Pow:
      return eval_expr(ch[0], values).pow(e.exponent());
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace eqsum4
