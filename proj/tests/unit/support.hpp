#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "eqsum4/integer.hpp"
#include "eqsum4/mpoly.hpp"
#include "eqsum4/rational.hpp"

namespace testsupport {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline eqsum4::Integer rand_big(int digits) {
  std::string s = rand_int(0, 1) ? "-" : "";
  s += char('1' + rand_int(0, 8));
  for (int i = 1; i < digits; ++i) s += char('0' + rand_int(0, 9));
  return eqsum4::Integer::parse(s);
}

inline eqsum4::Rational rand_rational(long range = 1000) {
  long d = 0;
  while (d == 0) d = rand_int(-range, range);
  return eqsum4::Rational(eqsum4::Integer(rand_int(-range, range)), eqsum4::Integer(d));
}

/// Random polynomial in u, v, w with small coefficients.
inline eqsum4::MPoly rand_poly(int terms = 4, int max_exp = 3) {
  using eqsum4::MPoly;
  static const MPoly u = MPoly::variable("u"), v = MPoly::variable("v"), w = MPoly::variable("w");
  MPoly f;
  for (int i = 0; i < terms; ++i)
    f += MPoly(rand_int(-9, 9)) * u.pow(rand_int(0, max_exp)) * v.pow(rand_int(0, max_exp)) *
         w.pow(rand_int(0, max_exp));
  return f;
}

}  // namespace testsupport
