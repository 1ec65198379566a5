#include "eqsum4/quartic_elliptic.hpp"

#include <algorithm>

#include "eqsum4/expr.hpp"

namespace eqsum4 {

// ---------------------------------------------------------------- Quadruple

bool Quadruple::satisfies_equation() const {
  return p.pow(4) + q.pow(4) == r.pow(4) + w.pow(4);
}

bool Quadruple::is_trivial() const {
  std::array<Integer, 2> lhs{p.abs(), q.abs()}, rhs{r.abs(), w.abs()};
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

bool Quadruple::is_primitive() const {
  return gcd(gcd(p, q), gcd(r, w)) == Integer(1);
}

Integer Quadruple::max_abs() const {
  return std::max({p.abs(), q.abs(), r.abs(), w.abs()});
}

std::size_t Quadruple::max_digits() const { return max_abs().digits(); }

Quadruple primitive_quadruple(const std::array<Rational, 4>& v) {
  Integer den(1);
  for (const auto& x : v) den = lcm(den, x.den());
  std::array<Integer, 4> ints;
  Integer g(0);
  for (std::size_t i = 0; i < 4; ++i) {
    ints[i] = v[i].num() * den.divexact(v[i].den());
    g = gcd(g, ints[i]);
  }
  if (!g.is_zero() && g != Integer(1))
    for (auto& x : ints) x = x.divexact(g);
  auto lead = std::find_if(ints.begin(), ints.end(), [](const Integer& x) { return !x.is_zero(); });
  if (lead != ints.end() && lead->sign() < 0)
    for (auto& x : ints) x = -x;
  return {ints[0], ints[1], ints[2], ints[3]};
}

// ------------------------------------------------------------- Curve models

Rational QuarticModel::eval(const Rational& u) const {
  Rational acc = coeffs[0];
  for (std::size_t i = 1; i < 5; ++i) acc = acc * u + coeffs[i];
  return acc;
}

Rational WeierstrassModel::discriminant() const {
  Rational b2 = a1 * a1 + Rational(4) * a2;
  Rational b4 = Rational(2) * a4 + a1 * a3;
  Rational b6 = a3 * a3 + Rational(4) * a6;
  Rational b8 = a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - Rational(8) * b4.pow(3) - Rational(27) * b6 * b6 +
         Rational(9) * b2 * b4 * b6;
}

bool WeierstrassModel::contains(const CurvePoint& p) const {
  if (p.infinite) return true;
  const auto& x = p.x;
  const auto& y = p.y;
  return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
}

CurvePoint WeierstrassModel::negate(const CurvePoint& p) const {
  if (p.infinite) return p;
  return CurvePoint::affine(p.x, -p.y - a1 * p.x - a3);
}

namespace {

void require_on_curve(const WeierstrassModel& c, const CurvePoint& p) {
  if (!c.contains(p)) throw NotOnCurve("point (" + p.x.str() + ", " + p.y.str() + ") is not on the curve");
}

CurvePoint add_unchecked(const WeierstrassModel& c, const CurvePoint& p, const CurvePoint& q) {
  if (p.infinite) return q;
  if (q.infinite) return p;
  Rational lambda;
  if (p.x == q.x) {
    if (p.y + q.y + c.a1 * q.x + c.a3 == Rational(0)) return CurvePoint::infinity();
    lambda = (Rational(3) * p.x * p.x + Rational(2) * c.a2 * p.x + c.a4 - c.a1 * p.y) /
             (Rational(2) * p.y + c.a1 * p.x + c.a3);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  Rational nu = p.y - lambda * p.x;
  Rational x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
  Rational y3 = -(lambda + c.a1) * x3 - nu - c.a3;
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

// Coefficients of f(s + h) for f = a4 U^4 + ... + a0.
std::array<Rational, 5> translate(const std::array<Rational, 5>& a, const Rational& h) {
  Rational h2 = h * h, h3 = h2 * h, h4 = h3 * h;
  return {a[0],
          Rational(4) * a[0] * h + a[1],
          Rational(6) * a[0] * h2 + Rational(3) * a[1] * h + a[2],
          Rational(4) * a[0] * h3 + Rational(3) * a[1] * h2 + Rational(2) * a[2] * h + a[3],
          a[0] * h4 + a[1] * h3 + a[2] * h2 + a[3] * h + a[4]};
}

}  // namespace

CurvePoint ec_add(const WeierstrassModel& c, const CurvePoint& p, const CurvePoint& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  return add_unchecked(c, p, q);
}

CurvePoint ec_mul(const WeierstrassModel& c, const Integer& m, const CurvePoint& p) {
  if (m.sign() < 0) throw std::invalid_argument("negative multiplier " + m.str());
  require_on_curve(c, p);
  CurvePoint acc = CurvePoint::infinity();
  for (std::size_t i = m.bit_length(); i-- > 0;) {
    acc = add_unchecked(c, acc, acc);
    if (m.test_bit(i)) acc = add_unchecked(c, acc, p);
  }
  return acc;
}

// ------------------------------------------------------- Birational reduction

BirationalMap::BirationalMap(const QuarticModel& quartic, const WeierstrassModel& curve)
    : quartic_(quartic), curve_(curve), shift_(quartic.base_u), q_(-quartic.base_v) {
  auto t = translate(quartic.coeffs, shift_);
  translated_ = {t[0], t[1], t[2], t[3]};
  // Points with y = 0 are roots of (x + a2)(x^2 + a4).
  std::vector<Rational> xs{-curve.a2};
  if (auto r = (-curve.a4).sqrt()) {
    xs.push_back(*r);
    xs.push_back(-*r);
  }
  for (const auto& x : xs) {
    auto pt = CurvePoint::affine(x, Rational(0));
    if (curve.contains(pt) && std::find(exceptions_.begin(), exceptions_.end(), pt) == exceptions_.end())
      exceptions_.push_back(pt);
  }
}

CurvePoint BirationalMap::forward(const Rational& u, const Rational& v) const {
  if (!quartic_.contains(u, v))
    throw NotOnCurve("(" + u.str() + ", " + v.str() + ") is not on the quartic");
  const auto& [a, b, c, d] = translated_;
  Rational s = u - shift_;
  if (s.is_zero()) {
    if (v == q_) return CurvePoint::infinity();
    return CurvePoint::affine(-curve_.a2, curve_.a1 * curve_.a2 - curve_.a3);
  }
  Rational two_q = Rational(2) * q_;
  Rational x = (two_q * (v + q_) + d * s) / (s * s);
  Rational y = (Rational(4) * q_ * q_ * (v + q_) + two_q * (d * s + c * s * s) - d * d * s * s / two_q) /
               (s * s * s);
  return CurvePoint::affine(std::move(x), std::move(y));
}

std::optional<QuarticPoint> BirationalMap::backward(const CurvePoint& p) const {
  if (p.infinite) return QuarticPoint{shift_, q_};
  if (p.y.is_zero()) return std::nullopt;
  const auto& c = translated_[2];
  const auto& d = translated_[3];
  Rational two_q = Rational(2) * q_;
  Rational s = (two_q * (p.x + c) - d * d / two_q) / p.y;
  Rational v = -q_ + s * (s * p.x - d) / two_q;
  return QuarticPoint{s + shift_, std::move(v)};
}

std::pair<WeierstrassModel, BirationalMap> quartic_to_weierstrass(const QuarticModel& quartic) {
  if (quartic.coeffs[0].is_zero()) throw DegenerateQuartic("leading coefficient is zero");
  if (!quartic.contains(quartic.base_u, quartic.base_v))
    throw DegenerateQuartic("base point is not on the quartic");
  if (quartic.base_v.is_zero()) throw DegenerateQuartic("base point has V = 0");
  auto t = translate(quartic.coeffs, quartic.base_u);
  const Rational& a = t[0];
  const Rational& b = t[1];
  const Rational& c = t[2];
  const Rational& d = t[3];
  Rational q = -quartic.base_v;
  WeierstrassModel curve;
  curve.a1 = d / q;
  curve.a2 = c - d * d / (Rational(4) * q * q);
  curve.a3 = Rational(2) * q * b;
  curve.a4 = Rational(-4) * q * q * a;
  curve.a6 = curve.a2 * curve.a4;
  if (curve.discriminant().is_zero()) throw DegenerateQuartic("Weierstrass model is singular");
  BirationalMap map(quartic, curve);
  return {curve, map};
}

// -------------------------------------------------------- closed-form data

QuarticModel discriminant_quartic(const Rational& u, const Rational& v) {
  if ((u + v).is_zero()) throw DegenerateParameters("u + v = 0");
  if ((u * u - u * v + v * v).is_zero()) throw DegenerateParameters("u^2 - uv + v^2 = 0");
  Rational u2 = u * u, u3 = u2 * u, u4 = u3 * u;
  Rational v2 = v * v, v3 = v2 * v, v4 = v3 * v;
  QuarticModel m;
  m.coeffs[0] = Rational(-28) * u4 - Rational(28) * v4 - Rational(64) * v * u3 -
                Rational(72) * v2 * u2 - Rational(64) * v3 * u;
  m.coeffs[1] = Rational(-64) * v4 + Rational(64) * u4 + Rational(64) * v * u3 - Rational(64) * v3 * u;
  m.coeffs[2] = Rational(-72) * u4 + Rational(144) * v2 * u2 - Rational(72) * v4;
  m.coeffs[3] = Rational(-64) * v * u3 + Rational(64) * v3 * u - Rational(64) * v4 + Rational(64) * u4;
  m.coeffs[4] = Rational(64) * v * u3 - Rational(72) * v2 * u2 + Rational(64) * v3 * u -
                Rational(28) * u4 - Rational(28) * v4;
  m.base_u = (u3 - v3) / (u3 + v3);
  Rational h = u2 - u * v + v2;
  m.base_v = Rational(24) * u3 * v3 * (u - v) / (h * h * (u + v));
  if (!m.contains(m.base_u, m.base_v))
    throw std::logic_error("base point of the discriminant quartic is off the model");
  return m;
}

Quadratic derivation_quadratic(const Rational& u, const Rational& v, const Rational& k,
                               const Rational& n) {
  Rational k2 = k * k, k3 = k2 * k, n2 = n * n, n3 = n2 * n;
  Rational u2 = u * u, u3 = u2 * u, v2 = v * v, v3 = v2 * v;
  Quadratic q;
  q.a = Rational(4) * v * k3 + Rational(4) * v * n3 - Rational(4) * u * n3 + Rational(4) * u * k3;
  q.b = Rational(-6) * u2 * n2 - Rational(6) * v2 * k2 + Rational(6) * v2 * n2 + Rational(6) * u2 * k2;
  q.c = Rational(-4) * u3 * n + Rational(4) * u3 * k + Rational(4) * v3 * k + Rational(4) * v3 * n;
  return q;
}

void check_lemma1_parameters(const Rational& u, const Rational& v) {
  if (u.is_zero()) throw DegenerateParameters("u = 0");
  if (v.is_zero()) throw DegenerateParameters("v = 0");
  if (u == v) throw DegenerateParameters("u = v");
  if (u == -v) throw DegenerateParameters("u = -v");
}

CurveTrace trace_point_to_quadruple(const Rational& u, const Rational& v, const Integer& m) {
  if (m.sign() < 1) throw std::invalid_argument("multiple m must be >= 1, got " + m.str());
  check_lemma1_parameters(u, v);
  CurveTrace tr;
  tr.u = u;
  tr.v = v;
  tr.m = m;
  tr.quartic = discriminant_quartic(u, v);
  std::tie(tr.curve, tr.map) = quartic_to_weierstrass(tr.quartic);
  tr.base_image = tr.map.forward(tr.quartic.base_u, tr.quartic.base_v);
  tr.multiple = ec_mul(tr.curve, m, tr.base_image);
  auto back = tr.map.backward(tr.multiple);
  if (!back) throw TrivialPoint(m.str() + "P is an exceptional point of the birational map");
  tr.recovered = *back;
  tr.k = tr.recovered.u.num();
  tr.n = tr.recovered.u.den();
  tr.quadratic = derivation_quadratic(u, v, Rational(tr.k), Rational(tr.n));

  const auto& qd = tr.quadratic;
  if (qd.a.is_zero()) {
    if (qd.b.is_zero()) throw TrivialPoint("quadratic in t vanishes identically");
    tr.roots.push_back(-qd.c / qd.b);
  } else {
    auto root = qd.discriminant().sqrt();
    if (!root) throw std::logic_error("discriminant in t is not a square at " + tr.recovered.u.str());
    Rational two_a = Rational(2) * qd.a;
    tr.roots.push_back((-qd.b + *root) / two_a);
    if (!root->is_zero()) tr.roots.push_back((-qd.b - *root) / two_a);
  }

  std::optional<std::pair<Quadruple, Rational>> best;
  Rational k(tr.k), n(tr.n);
  for (const auto& t : tr.roots) {
    Quadruple cand = primitive_quadruple({k * t + u, n * t + v, k * t - v, n * t + u});
    if (cand.is_trivial()) continue;
    if (!best || cand.max_abs() < best->first.max_abs()) best.emplace(cand, t);
  }
  if (!best) throw TrivialPoint("every root in t gives a trivial quadruple");
  tr.quadruple = best->first;
  tr.t = best->second;
  if (!tr.quadruple.satisfies_equation())
    throw std::logic_error("quadruple from " + m.str() + "P fails p^4+q^4=r^4+w^4");
  return tr;
}

const std::array<MPoly, 4>& lemma1_polynomials() {
  static const std::array<MPoly, 4> polys = {
      parse_poly("u^7+u^5-2u^3-3u^2+u"),
      parse_poly("3u^5+u^2+u^6-2u^4+1"),
      parse_poly("3u^5-u^2-u^6+2u^4-1"),
      parse_poly("u^7+u^5-2u^3+3u^2+u"),
  };
  return polys;
}

Quadruple lemma1_closed_form(const Rational& u) {
  if (u.is_zero() || u == Rational(1) || u == Rational(-1))
    throw DegenerateParameters("u must not be 0 or +-1, got " + u.str());
  Rational u2 = u * u;
  if ((u2.pow(3) - Rational(2) * u2 * u2 - Rational(2) * u2 + Rational(1)).is_zero())
    throw DegenerateParameters("u^6 - 2u^4 - 2u^2 + 1 = 0");
  Assignment at{{"u", u}};
  const auto& polys = lemma1_polynomials();
  Quadruple q = primitive_quadruple({polys[0].eval(at), polys[1].eval(at), polys[2].eval(at),
                                     polys[3].eval(at)});
  if (!q.satisfies_equation()) throw std::logic_error("closed form fails p^4+q^4=r^4+w^4 at u=" + u.str());
  return q;
}

}  // namespace eqsum4
