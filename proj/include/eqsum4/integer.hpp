#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eqsum4 {

/// Raised by every exact division whose divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Arbitrary-precision signed integer. Thin value wrapper over a GMP integer;
/// GMP keeps a single representation of zero so there is no negative zero.
class Integer {
 public:
  Integer() = default;
  Integer(int v) : v_(static_cast<long>(v)) {}
  Integer(long v) : v_(v) {}
  Integer(long long v) : v_(static_cast<long>(v)) {
    static_assert(sizeof(long) == sizeof(long long));
  }
  Integer(unsigned v) : v_(static_cast<unsigned long>(v)) {}
  Integer(unsigned long v) : v_(v) {}
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  /// Decimal with optional leading sign. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  std::string str() const { return v_.get_str(10); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  /// Decimal digits of |value|; zero has one digit.
  std::size_t digits() const;

  /// Bits needed for |value|; zero needs none.
  std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
  /// Bit i of |value|.
  bool test_bit(std::size_t i) const { return mpz_tstbit(abs().v_.get_mpz_t(), i) != 0; }

  Integer abs() const { return Integer(mpz_class(::abs(v_))); }
  Integer pow(unsigned long e) const;
  /// Floor of the square root; requires a non-negative value.
  Integer isqrt() const;
  bool is_perfect_square() const;
  /// Caller guarantees d divides *this.
  Integer divexact(const Integer& d) const;

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
  /// Truncating division.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);
  /// this += a * b
  void addmul(const Integer& a, const Integer& b) {
    mpz_addmul(v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  Integer operator-() const { return Integer(mpz_class(-v_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
/// Non-negative lcm; lcm(0, x) = 0.
Integer lcm(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace eqsum4

template <>
struct std::hash<eqsum4::Integer> {
  std::size_t operator()(const eqsum4::Integer& v) const noexcept;
};
