#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqsum4/integer.hpp"
#include "eqsum4/mpoly.hpp"
#include "eqsum4/rational.hpp"

namespace eqsum4 {

class DegenerateParameters : public std::domain_error {
 public:
  explicit DegenerateParameters(const std::string& why)
      : std::domain_error("degenerate parameters: " + why) {}
};

class DegenerateQuartic : public std::domain_error {
 public:
  explicit DegenerateQuartic(const std::string& why)
      : std::domain_error("degenerate quartic: " + why) {}
};

/// The chosen multiple of P gives only trivial quadruples.
class TrivialPoint : public std::domain_error {
 public:
  explicit TrivialPoint(const std::string& why)
      : std::domain_error("trivial point (try next m): " + why) {}
};

class NotOnCurve : public std::invalid_argument {
 public:
  explicit NotOnCurve(const std::string& what) : std::invalid_argument(what) {}
};

/// (p, q, r, w) with p^4 + q^4 = r^4 + w^4.
struct Quadruple {
  Integer p, q, r, w;

  bool satisfies_equation() const;
  /// {|p|,|q|} == {|r|,|w|} as multisets.
  bool is_trivial() const;
  bool is_primitive() const;
  Integer max_abs() const;
  std::size_t max_digits() const;
  std::array<Integer, 4> values() const { return {p, q, r, w}; }

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// Clears denominators, divides out the common gcd and flips the overall
/// sign so the first nonzero entry (normally p) is positive.
Quadruple primitive_quadruple(const std::array<Rational, 4>& v);

/// V^2 = a4 U^4 + a3 U^3 + a2 U^2 + a1 U + a0 with a known rational point.
struct QuarticModel {
  std::array<Rational, 5> coeffs;  // a4, a3, a2, a1, a0
  Rational base_u, base_v;

  Rational eval(const Rational& u) const;
  bool contains(const Rational& u, const Rational& v) const { return v * v == eval(u); }
};

struct QuarticPoint {
  Rational u, v;
  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

struct CurvePoint {
  bool infinite = true;
  Rational x, y;

  static CurvePoint infinity() { return {}; }
  static CurvePoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassModel {
  Rational a1, a2, a3, a4, a6;

  Rational discriminant() const;
  bool contains(const CurvePoint& p) const;
  CurvePoint negate(const CurvePoint& p) const;
};

/// Maps between a quartic with rational point (U0, V0), V0 != 0, and its
/// Weierstrass model. With s = U - U0 the quartic reads
/// V^2 = a s^4 + b s^3 + c s^2 + d s + q^2 where q = -V0; the base point
/// (U0, V0) goes to the affine point (-a2, a1 a2 - a3) and (U0, -V0) to O.
class BirationalMap {
 public:
  BirationalMap() = default;
  BirationalMap(const QuarticModel& quartic, const WeierstrassModel& curve);

  /// Throws NotOnCurve when (u, v) is not on the quartic.
  CurvePoint forward(const Rational& u, const Rational& v) const;
  /// nullopt exactly at the exception points.
  std::optional<QuarticPoint> backward(const CurvePoint& p) const;
  /// Rational curve points outside the domain of backward (the points with y = 0).
  const std::vector<CurvePoint>& exceptions() const { return exceptions_; }

  const Rational& shift() const { return shift_; }
  const Rational& q() const { return q_; }
  /// Translated quartic coefficients a, b, c, d of s^4..s.
  const std::array<Rational, 4>& translated() const { return translated_; }

 private:
  QuarticModel quartic_;
  WeierstrassModel curve_;
  Rational shift_, q_;
  std::array<Rational, 4> translated_;
  std::vector<CurvePoint> exceptions_;
};

/// Coefficients of A t^2 + B t + C = 0.
struct Quadratic {
  Rational a, b, c;
  Rational discriminant() const { return b * b - Rational(4) * a * c; }
  bool is_degenerate() const { return a.is_zero(); }
};

/// The quartic in U = k/n expressing that the t-quadratic has a square
/// discriminant, together with its point
/// ((u^3-v^3)/(u^3+v^3), 24u^3v^3(u-v)/((u^2-uv+v^2)^2 (u+v))).
QuarticModel discriminant_quartic(const Rational& u, const Rational& v);

/// Substituting p=kt+u, q=nt+v, r=kt-v, w=nt+u into p^4+q^4-r^4-w^4 and
/// dividing by t.
Quadratic derivation_quadratic(const Rational& u, const Rational& v, const Rational& k,
                               const Rational& n);

std::pair<WeierstrassModel, BirationalMap> quartic_to_weierstrass(const QuarticModel& quartic);

CurvePoint ec_add(const WeierstrassModel& c, const CurvePoint& p, const CurvePoint& q);
CurvePoint ec_mul(const WeierstrassModel& c, const Integer& m, const CurvePoint& p);

/// Every intermediate of the multiple-of-P pipeline for one (u, v, m).
struct CurveTrace {
  Rational u, v;
  Integer m;
  QuarticModel quartic;
  WeierstrassModel curve;
  BirationalMap map;
  CurvePoint base_image;  // P
  CurvePoint multiple;    // mP
  QuarticPoint recovered;
  Integer k, n;
  Quadratic quadratic;
  std::vector<Rational> roots;
  Rational t;
  Quadruple quadruple;
};

/// Rejects u = 0, v = 0, u = v, u = -v.
void check_lemma1_parameters(const Rational& u, const Rational& v);

CurveTrace trace_point_to_quadruple(const Rational& u, const Rational& v, const Integer& m);

inline Quadruple point_to_quadruple(const Rational& u, const Rational& v, const Integer& m) {
  return trace_point_to_quadruple(u, v, m).quadruple;
}

/// The closed-form quadruple in u (v = 1), in printed order p, q, r, w.
const std::array<MPoly, 4>& lemma1_polynomials();

/// Evaluates lemma1_polynomials at u, then reduces to a primitive quadruple.
Quadruple lemma1_closed_form(const Rational& u);

}  // namespace eqsum4
