#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqsum4/integer.hpp"
#include "eqsum4/mpoly.hpp"
#include "eqsum4/rational.hpp"

namespace eqsum4 {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Immutable arithmetic expression tree over integer constants and symbols,
/// using +, -, * and non-negative integer powers. Nodes are shared.
class Expr {
 public:
  enum class Kind { Constant, Symbol, Add, Sub, Mul, Neg, Pow };

  Expr() : Expr(Integer(0)) {}
  Expr(const Integer& c);
  Expr(int c) : Expr(Integer(c)) {}
  static Expr symbol(std::string name);

  Kind kind() const { return node_->kind; }
  const Integer& constant() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  unsigned exponent() const { return node_->exponent; }
  const std::vector<Expr>& children() const { return node_->children; }

  Expr pow(unsigned e) const;
  /// Replaces symbols by expressions; unlisted symbols stay.
  Expr bind(const std::map<std::string, Expr, std::less<>>& defs) const;

  friend Expr operator+(const Expr& a, const Expr& b) { return binary(Kind::Add, a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return binary(Kind::Sub, a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return binary(Kind::Mul, a, b); }
  Expr operator-() const;

 private:
  struct Node {
    Kind kind;
    Integer value;
    std::string name;
    unsigned exponent = 0;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr binary(Kind k, const Expr& a, const Expr& b);

  std::shared_ptr<const Node> node_;
};

/// Parses the notation used for printed families: implicit multiplication
/// ("3u^2v", "u(u+1)f1"), "^n" or "^{n}" powers, optional '*'. An identifier is
/// one letter followed by optional digits, so "vu^3" reads as v*u^3.
Expr parse_expr(std::string_view text);

/// Fully expanded canonical form.
MPoly poly_expand(const Expr& e);
/// Evaluates the tree directly, without expanding.
Rational eval_expr(const Expr& e, const Assignment& values);

/// Parse then expand.
inline MPoly parse_poly(std::string_view text) { return poly_expand(parse_expr(text)); }

}  // namespace eqsum4
