#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "eqsum4/integer.hpp"

namespace eqsum4 {

/// Exact rational in lowest terms with a positive denominator. Every
/// constructor and operator re-establishes that form, so == is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}
  Rational(Integer v) : num_(std::move(v)), den_(1) {}
  /// Throws DivisionByZero when den == 0.
  Rational(Integer num, Integer den);

  /// Accepts "n" or "n/d".
  static Rational parse(std::string_view text);
  /// "n/d", or just "n" when the denominator is one.
  std::string str() const;

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Integer(1); }

  Rational inverse() const;
  Rational pow(unsigned long e) const { return Rational(num_.pow(e), den_.pow(e), Reduced{}); }
  Rational abs() const { return Rational(num_.abs(), den_, Reduced{}); }
  /// Exact square root when both parts are perfect squares.
  std::optional<Rational> sqrt() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(-num_, den_, Reduced{}); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  struct Reduced {};
  Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace eqsum4
