#include "eqsum4/integer.hpp"

#include <cctype>
#include <ostream>

namespace eqsum4 {

Integer Integer::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  mpz_class v(std::string(text.substr(i)), 10);
  if (negative) v = -v;
  return Integer(std::move(v));
}

long Integer::to_long() const {
  if (!fits_long()) throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return v_.get_si();
}

std::size_t Integer::digits() const {
  // mpz_sizeinbase may overshoot by one for base 10.
  std::string s = abs().str();
  return s.size();
}

Integer Integer::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return Integer(std::move(r));
}

Integer Integer::isqrt() const {
  if (sign() < 0) throw std::domain_error("isqrt of negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v_.get_mpz_t());
  return Integer(std::move(r));
}

bool Integer::is_perfect_square() const {
  return sign() >= 0 && mpz_perfect_square_p(v_.get_mpz_t()) != 0;
}

Integer Integer::divexact(const Integer& d) const {
  if (d.is_zero()) throw DivisionByZero();
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Integer(std::move(r));
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw DivisionByZero();
  mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw DivisionByZero();
  mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(r));
}

Integer lcm(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace eqsum4

std::size_t std::hash<eqsum4::Integer>::operator()(const eqsum4::Integer& v) const noexcept {
  const __mpz_struct* z = v.raw().get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
  for (int i = 0; i < n; ++i) h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::size_t>(z->_mp_d[i]);
  return h;
}
