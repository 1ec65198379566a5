#include "eqsum4/rational.hpp"

#include <ostream>

namespace eqsum4 {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != Integer(1)) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.sign() < 0) return Rational(-den_, -num_, Reduced{});
  return Rational(den_, num_, Reduced{});
}

std::optional<Rational> Rational::sqrt() const {
  if (!num_.is_perfect_square() || !den_.is_perfect_square()) return std::nullopt;
  return Rational(num_.isqrt(), den_.isqrt(), Reduced{});
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  // Cross-cancel first so the products stay small.
  Integer g1 = gcd(num_, o.den_);
  Integer g2 = gcd(o.num_, den_);
  num_ = num_.divexact(g1) * o.num_.divexact(g2);
  den_ = den_.divexact(g2) * o.den_.divexact(g1);
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace eqsum4
