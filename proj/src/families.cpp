#include "eqsum4/families.hpp"

#include <algorithm>
#include <array>

namespace eqsum4 {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 10> kFamilyNames = {{
    {FamilyId::N3_T2, "N3_T2"},
    {FamilyId::N4_T3, "N4_T3"},
    {FamilyId::N5_T5, "N5_T5"},
    {FamilyId::N6_T6, "N6_T6"},
    {FamilyId::VLIFT, "VLIFT"},
    {FamilyId::APX_N3, "APX_N3"},
    {FamilyId::APX_N4, "APX_N4"},
    {FamilyId::APX_N5, "APX_N5"},
    {FamilyId::APX_N6, "APX_N6"},
    {FamilyId::LEMMA1_EX, "LEMMA1_EX"},
}};

SolutionPair finish(Sides<Integer> sides, Constraints flags, bool primitive, std::string_view who) {
  SolutionPair sp{std::move(sides.xs), std::move(sides.ys), flags};
  if (primitive) sp = reduce_primitive(std::move(sp));
  for (auto c : flags.list())
    if (!sp.holds(c))
      throw std::logic_error(std::string(who) + ": constructed pair fails " + std::string(to_string(c)));
  return sp;
}

void require_quadruple(const Quadruple& qd, std::string_view who) {
  if (!qd.satisfies_equation())
    throw std::invalid_argument(std::string(who) + ": quadruple does not satisfy p^4+q^4=r^4+w^4");
}

Sides<Integer> clear_denominators(const Sides<Rational>& s) {
  Integer den(1);
  for (const auto& x : s.xs) den = lcm(den, x.den());
  for (const auto& y : s.ys) den = lcm(den, y.den());
  Sides<Integer> out;
  for (const auto& x : s.xs) out.xs.push_back(x.num() * den.divexact(x.den()));
  for (const auto& y : s.ys) out.ys.push_back(y.num() * den.divexact(y.den()));
  return out;
}

Integer max_abs_entry(const SolutionPair& sp) {
  Integer m(0);
  for (const auto& x : sp.xs) m = std::max(m, x.abs());
  for (const auto& y : sp.ys) m = std::max(m, y.abs());
  return m;
}

}  // namespace

std::string_view to_string(FamilyId f) {
  for (const auto& [id, name] : kFamilyNames)
    if (id == f) return name;
  return "?";
}

std::optional<FamilyId> family_from_string(std::string_view name) {
  for (const auto& [id, n] : kFamilyNames)
    if (n == name) return id;
  return std::nullopt;
}

bool Sextuple::satisfies_equation() const {
  return p.pow(4) + q.pow(4) + r.pow(4) == k.pow(4) + m.pow(4) + n.pow(4);
}

SolutionPair n3_family(const Quadruple& qd, bool primitive) {
  require_quadruple(qd, "n3_family");
  return finish(n3_construct(qd.p, qd.q, qd.r, qd.w), {Constraint::Power4, Constraint::Product},
                primitive, "n3_family");
}

SolutionPair n4_family(const Quadruple& qd, const Integer& m, bool primitive) {
  require_quadruple(qd, "n4_family");
  return finish(n4_construct(qd.p, qd.q, qd.r, qd.w, m), {Constraint::Power4, Constraint::Product},
                primitive, "n4_family");
}

SolutionPair n5_family(const Sextuple& s, bool primitive) {
  if (!s.satisfies_equation())
    throw std::invalid_argument("n5_family: sextuple does not satisfy p^4+q^4+r^4=k^4+m^4+n^4");
  return finish(n5_construct(s.p, s.q, s.r, s.k, s.m, s.n), {Constraint::Power4, Constraint::Product},
                primitive, "n5_family");
}

SolutionPair n6_family(const Quadruple& qa, const Quadruple& qb, bool primitive) {
  require_quadruple(qa, "n6_family");
  require_quadruple(qb, "n6_family");
  return finish(n6_construct(qa.p, qa.q, qa.r, qa.w, qb.p, qb.q, qb.r, qb.w),
                {Constraint::Power4, Constraint::Product}, primitive, "n6_family");
}

SolutionPair vandemergel_lift(const Integer& r, const Integer& s, const Integer& u, const Integer& v,
                              bool primitive) {
  if (r.pow(4) + s.pow(4) != u.pow(4) + v.pow(4))
    throw std::invalid_argument("vandemergel_lift: r^4+s^4 != u^4+v^4");
  return finish(vlift_construct(r, s, u, v), {Constraint::Power4, Constraint::Product}, primitive,
                "vandemergel_lift");
}

Sextuple sextuple_from_n3(const SolutionPair& sp) {
  if (sp.n() != 3) throw std::invalid_argument("sextuple_from_n3: pair must have n = 3");
  Sextuple s{sp.xs[2], sp.xs[1], sp.xs[0], sp.ys[0], sp.ys[2], sp.ys[1]};
  if (!s.satisfies_equation()) throw std::invalid_argument("sextuple_from_n3: pair fails POWER4");
  return s;
}

QuarticModel appendix_quartic(const Rational& a, const Rational& b, const Rational& q) {
  if (a.is_zero()) throw DegenerateParameters("a = 0");
  auto P = [](const Rational& x, unsigned e) { return x.pow(e); };
  const Rational k28(28), k64(64), k72(72);
  QuarticModel m;
  m.coeffs[0] = -k28 * P(a, 4);
  m.coeffs[1] = k64 * q * P(a, 4) + k64 * a * P(b, 3) - k64 * a * P(b, 3) * q;
  m.coeffs[2] = -k72 * P(a, 2) * P(b, 2) + k72 * P(a, 2) * P(b, 2) * P(q, 2) - k72 * P(q, 2) * P(a, 4);
  m.coeffs[3] = k64 * P(a, 3) * b - k64 * P(a, 3) * b * P(q, 3) + k64 * P(q, 3) * P(a, 4);
  m.coeffs[4] = k72 * P(a, 2) * P(b, 2) * P(q, 2) - k72 * P(a, 2) * P(q, 4) * P(b, 2) +
                k64 * P(b, 3) * P(q, 4) * a - k64 * P(b, 3) * a * P(q, 3) - k72 * P(b, 4) * P(q, 2) +
                k64 * P(b, 4) * q - k28 * P(b, 4) - k28 * P(b, 4) * P(q, 4) + k64 * P(b, 4) * P(q, 3) -
                k28 * P(a, 4) * P(q, 4) - k64 * P(a, 3) * q * b + k64 * P(a, 3) * P(q, 4) * b;
  m.base_u = (-P(b, 3) * q + P(b, 3) + P(a, 3) * q) / P(a, 3);
  m.base_v = Rational(6) * P(b, 2) * (q - Rational(1)) * (a - b) *
             (P(a, 3) + P(a, 3) * q + P(a, 2) * b - P(a, 2) * q * b + a * P(b, 2) - a * P(b, 2) * q -
              P(b, 3) * q + P(b, 3)) /
             P(a, 4);
  if (!m.contains(m.base_u, m.base_v))
    throw std::logic_error("appendix base point is off its quartic");
  return m;
}

SolutionPair appendix_n3_generate(const Integer& a, const Integer& b, const Integer& q, const Integer& m,
                                  bool primitive) {
  if (a.is_zero()) throw DegenerateParameters("a = 0");
  if (m.sign() < 1) throw std::invalid_argument("multiple m must be >= 1, got " + m.str());
  Rational ra(a), rb(b), rq(q);
  QuarticModel quartic = appendix_quartic(ra, rb, rq);
  Rational p = quartic.base_u;
  if (m != Integer(1)) {
    if (quartic.base_v.is_zero())
      throw DegenerateParameters("base point has V = 0 (q = 1, a = b or b = 0)");
    auto [curve, map] = quartic_to_weierstrass(quartic);
    CurvePoint mp = ec_mul(curve, m, map.forward(quartic.base_u, quartic.base_v));
    auto back = map.backward(mp);
    if (!back) throw TrivialPoint(m.str() + "P is an exceptional point of the birational map");
    p = back->u;
  }

  Rational p2 = p * p, q2 = rq * rq, a2 = ra * ra, b2 = rb * rb;
  Quadratic qd;
  qd.a = Rational(4) * ra * p2 * p + Rational(4) * rb * q2 * rq - Rational(4) * ra * q2 * rq -
         Rational(4) * rb;
  qd.b = Rational(6) * b2 * q2 - Rational(6) * b2 + Rational(6) * a2 * p2 - Rational(6) * a2 * q2;
  qd.c = Rational(4) * b2 * rb * rq + Rational(4) * a2 * ra * p - Rational(4) * b2 * rb -
         Rational(4) * a2 * ra * rq;

  std::vector<Rational> roots;
  if (qd.a.is_zero()) {
    if (qd.b.is_zero()) throw DegenerateParameters("quadratic in t vanishes to degree 0");
    roots.push_back(-qd.c / qd.b);
  } else {
    auto root = qd.discriminant().sqrt();
    if (!root) throw NotOnCurve("discriminant in t is not a square at p = " + p.str());
    roots.push_back((-qd.b + *root) / (Rational(2) * qd.a));
    if (!root->is_zero()) roots.push_back((-qd.b - *root) / (Rational(2) * qd.a));
  }

  const Constraints flags{Constraint::Power4, Constraint::LinSum};
  std::optional<SolutionPair> best, fallback;
  for (const auto& t : roots) {
    SolutionPair sp = finish(clear_denominators(appendix_construct(ra, rb, p, rq, t)), flags, primitive,
                             "appendix_n3_generate");
    if (!fallback) fallback = sp;
    if (sp.is_trivial() || sp.is_degenerate()) continue;
    if (!best || max_abs_entry(sp) < max_abs_entry(*best)) best = sp;
  }
  return best ? *best : *fallback;
}

}  // namespace eqsum4
