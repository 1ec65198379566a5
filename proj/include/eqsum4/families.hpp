#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "eqsum4/integer.hpp"
#include "eqsum4/quartic_elliptic.hpp"
#include "eqsum4/solution.hpp"

namespace eqsum4 {

enum class FamilyId {
  N3_T2,      // n = 3 product family from one quadruple
  N4_T3,      // n = 4 product family with free m
  N5_T5,      // n = 5 product family from a sextuple
  N6_T6,      // n = 6 product family from two quadruples
  VLIFT,      // (ru, su, v^2 | rv, sv, u^2)
  APX_N3,     // linear-sum families
  APX_N4,
  APX_N5,
  APX_N6,
  LEMMA1_EX,  // closed-form quadruple
};

std::string_view to_string(FamilyId f);
std::optional<FamilyId> family_from_string(std::string_view name);

/// Both sides of a construction over any ring (Integer numerically, MPoly symbolically).
template <class T>
struct Sides {
  std::vector<T> xs, ys;
};

/// (rp, wp, q^2 | rq, wq, p^2) for p^4+q^4 = r^4+w^4.
template <class T>
Sides<T> n3_construct(const T& p, const T& q, const T& r, const T& w) {
  return {{r * p, w * p, q * q}, {r * q, w * q, p * p}};
}

/// x = (p(m+r^4-q^4), q(m+p^4-w^4), -r(-m+p^4-w^4), w(m-r^4+q^4)),
/// y = (p(m-r^4+q^4), -q(-m+p^4-w^4), r(m+p^4-w^4), w(m+r^4-q^4)).
template <class T>
Sides<T> n4_construct(const T& p, const T& q, const T& r, const T& w, const T& m) {
  T p4 = p.pow(4), q4 = q.pow(4), r4 = r.pow(4), w4 = w.pow(4);
  return {{p * (m + r4 - q4), q * (m + p4 - w4), -(r * (-m + p4 - w4)), w * (m - r4 + q4)},
          {p * (m - r4 + q4), -(q * (-m + p4 - w4)), r * (m + p4 - w4), w * (m + r4 - q4)}};
}

/// (kp, mp, q^2, np, rq | kq, mq, p^2, nq, rp) for p^4+q^4+r^4 = k^4+m^4+n^4.
template <class T>
Sides<T> n5_construct(const T& p, const T& q, const T& r, const T& k, const T& m, const T& n) {
  return {{k * p, m * p, q * q, n * p, r * q}, {k * q, m * q, p * p, n * q, r * p}};
}

/// (mp, np, q^2, tr, wr, s^2 | mq, nq, p^2, ts, ws, r^2) for
/// p^4+q^4 = m^4+n^4 and s^4+r^4 = t^4+w^4.
template <class T>
Sides<T> n6_construct(const T& p, const T& q, const T& m, const T& n, const T& r, const T& s,
                      const T& t, const T& w) {
  return {{m * p, n * p, q * q, t * r, w * r, s * s}, {m * q, n * q, p * p, t * s, w * s, r * r}};
}

/// (ru, su, v^2 | rv, sv, u^2) for r^4+s^4 = u^4+v^4.
template <class T>
Sides<T> vlift_construct(const T& r, const T& s, const T& u, const T& v) {
  return {{r * u, s * u, v * v}, {r * v, s * v, u * u}};
}

/// (pt+a, qt+b, t | pt, qt+a, t+b): equal linear sums by shape.
template <class T>
Sides<T> appendix_construct(const T& a, const T& b, const T& p, const T& q, const T& t) {
  return {{p * t + a, q * t + b, t}, {p * t, q * t + a, t + b}};
}

/// (p, q, r, k, m, n) with p^4+q^4+r^4 = k^4+m^4+n^4.
struct Sextuple {
  Integer p, q, r, k, m, n;
  bool satisfies_equation() const;
};

// Every generator below recomputes each flag it sets and throws
// std::logic_error if one fails, so a returned flag is always verified.
// Unsatisfied preconditions raise std::invalid_argument.

SolutionPair n3_family(const Quadruple& qd, bool primitive = true);
SolutionPair n4_family(const Quadruple& qd, const Integer& m, bool primitive = true);
SolutionPair n5_family(const Sextuple& s, bool primitive = true);
/// qa = (p, q, m, n); qb = (r, s, t, w) so that qb.p^4 + qb.q^4 = qb.r^4 + qb.w^4.
SolutionPair n6_family(const Quadruple& qa, const Quadruple& qb, bool primitive = true);
SolutionPair vandemergel_lift(const Integer& r, const Integer& s, const Integer& u, const Integer& v,
                              bool primitive = true);

/// Roles (p,q,r) = (x3,x2,x1) and (k,m,n) = (y1,y3,y2) of an n = 3 pair.
Sextuple sextuple_from_n3(const SolutionPair& sp);

/// The linear-sum method at (a, b, q): p comes from the point
/// ((-b^3q+b^3+a^3q)/a^3, ...) on the quartic in p, or from its m-th multiple
/// on the associated elliptic curve when m > 1.
SolutionPair appendix_n3_generate(const Integer& a, const Integer& b, const Integer& q,
                                  const Integer& m = Integer(1), bool primitive = true);

/// The quartic V^2 = disc_t(p) for the linear-sum method, with its printed point.
QuarticModel appendix_quartic(const Rational& a, const Rational& b, const Rational& q);

}  // namespace eqsum4
