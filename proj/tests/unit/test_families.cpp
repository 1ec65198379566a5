#include <doctest.h>

#include "eqsum4/expr.hpp"
#include "eqsum4/families.hpp"
#include "support.hpp"

using namespace eqsum4;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const Quadruple kQ2{Integer(134), Integer(133), Integer(59), Integer(158)};

MPoly var(const char* n) { return MPoly::variable(n); }

}  // namespace

TEST_CASE("n3 family from (134,133,59,158)") {
  SolutionPair sp = n3_family(kQ2);
  CHECK(sp.xs == ints({7906, 21172, 17689}));
  CHECK(sp.ys == ints({7847, 21014, 17956}));
  CHECK(sp.flags == Constraints{Constraint::Power4, Constraint::Product});
  CHECK(sp.holds(Constraint::Power4));
  CHECK(sp.holds(Constraint::Product));
  CHECK_FALSE(sp.is_trivial());
  CHECK(sp.is_primitive());
  // independent check of the product: 7906*21172*17689 = 7847*21014*17956
  CHECK(7906L * 21172L * 17689L == 7847L * 21014L * 17956L);
}

TEST_CASE("n3 family edge cases") {
  Quadruple t{Integer(3), Integer(5), Integer(3), Integer(5)};
  CHECK(n3_family(t).is_trivial());
  CHECK_THROWS_AS(n3_family(Quadruple{Integer(1), Integer(2), Integer(3), Integer(4)}),
                  std::invalid_argument);
  SolutionPair raw = n3_family(Quadruple{Integer(268), Integer(266), Integer(118), Integer(316)}, false);
  CHECK_FALSE(raw.is_primitive());
  CHECK(reduce_primitive(raw) == n3_family(kQ2));
}

TEST_CASE("n4 family") {
  SolutionPair sp = n4_family(kQ2, Integer(1));
  CHECK(sp.n() == 4);
  CHECK(sp.holds(Constraint::Power4));
  CHECK(sp.holds(Constraint::Product));
  CHECK_FALSE(sp.is_trivial());
  CHECK(n4_family(kQ2, Integer(0)).is_trivial());
  for (long m : {-7L, 2L, 1000000L}) CHECK(n4_family(kQ2, Integer(m)).holds(Constraint::Power4));
}

TEST_CASE("n4 product identity holds without the quartic relation") {
  auto s = n4_construct(var("p"), var("q"), var("r"), var("w"), var("m"));
  CHECK(product_residual(s.xs, s.ys).is_zero());
  MPoly pow4 = power_sum_residual(s.xs, s.ys, 4);
  CHECK_FALSE(pow4.is_zero());
  // the power-sum residual vanishes on p^4+q^4 = r^4+w^4: test at a quadruple
  Assignment at{{"p", Rational(134)}, {"q", Rational(133)}, {"r", Rational(59)}, {"w", Rational(158)},
                {"m", Rational(12345)}};
  CHECK(pow4.eval(at) == Rational(0));
}

TEST_CASE("n5 family") {
  Sextuple s = sextuple_from_n3(n3_family(kQ2));
  CHECK(s.satisfies_equation());
  CHECK(s.p == Integer(17689));
  CHECK(s.k == Integer(7847));
  SolutionPair sp = n5_family(s);
  CHECK(sp.n() == 5);
  CHECK(sp.holds(Constraint::Power4));
  CHECK(sp.holds(Constraint::Product));
  CHECK_FALSE(sp.is_trivial());
  Sextuple eq{Integer(2), Integer(2), Integer(1), Integer(2), Integer(2), Integer(1)};
  CHECK(n5_family(eq).is_trivial());
  auto sym = n5_construct(var("p"), var("q"), var("r"), var("k"), var("m"), var("n"));
  CHECK(product_residual(sym.xs, sym.ys).is_zero());
  MPoly factor = parse_poly("-(p-q)(p+q)(p^2+q^2)(p^4-n^4-m^4-k^4+r^4+q^4)");
  CHECK(power_sum_residual(sym.xs, sym.ys, 4) == factor);
}

TEST_CASE("n6 family") {
  Quadruple qa = lemma1_closed_form(Rational(2));
  Quadruple qb = lemma1_closed_form(Rational(3));
  SolutionPair sp = n6_family(qa, qb);
  CHECK(sp.n() == 6);
  CHECK(sp.holds(Constraint::Power4));
  CHECK(sp.holds(Constraint::Product));
  CHECK(n6_family(qa, qa).holds(Constraint::Power4));
  auto sym = n6_construct(var("p"), var("q"), var("m"), var("n"), var("r"), var("s"), var("t"), var("w"));
  CHECK(product_residual(sym.xs, sym.ys).is_zero());
  MPoly split = parse_poly("(p-q)(p+q)(p^2+q^2)(-p^4+n^4+m^4-q^4)") +
                parse_poly("(s-r)(s+r)(s^2+r^2)(s^4-t^4-w^4+r^4)");
  CHECK(power_sum_residual(sym.xs, sym.ys, 4) == split);
}

TEST_CASE("vandemergel lift") {
  SolutionPair sp = vandemergel_lift(Integer(59), Integer(158), Integer(133), Integer(134));
  CHECK(sp.xs == ints({59 * 133, 158 * 133, 134 * 134}));
  CHECK(sp.ys == ints({59 * 134, 158 * 134, 133 * 133}));
  CHECK(vandemergel_lift(Integer(4), Integer(9), Integer(4), Integer(9)).is_trivial());
  CHECK_THROWS_AS(vandemergel_lift(Integer(1), Integer(2), Integer(3), Integer(4)), std::invalid_argument);
}

TEST_CASE("appendix method") {
  SolutionPair sp = appendix_n3_generate(Integer(1), Integer(2), Integer(3));
  CHECK(sp.n() == 3);
  CHECK(sp.flags == Constraints{Constraint::Power4, Constraint::LinSum});
  CHECK(sp.holds(Constraint::Power4));
  CHECK(sp.holds(Constraint::LinSum));
  CHECK(sp.is_primitive());
  auto sym = appendix_construct(var("a"), var("b"), var("p"), var("q"), var("t"));
  CHECK(linear_residual(sym.xs, sym.ys).is_zero());
  for (long b = -4; b <= 4; ++b)
    for (long q = -4; q <= 4; ++q) {
      if (b == 0) continue;
      try {
        SolutionPair g = appendix_n3_generate(Integer(1), Integer(b), Integer(q));
        CHECK(g.holds(Constraint::Power4));
        CHECK(g.holds(Constraint::LinSum));
      } catch (const std::domain_error&) {
      } catch (const NotOnCurve&) {
      }
    }
  CHECK_THROWS_AS(appendix_n3_generate(Integer(0), Integer(2), Integer(3)), DegenerateParameters);
}

TEST_CASE("appendix quartic is the t-discriminant") {
  // Oracle: expand the quadratic's discriminant symbolically in p.
  MPoly A = parse_poly("4ap^3+4bq^3-4aq^3-4b");
  MPoly B = parse_poly("6b^2q^2-6b^2+6a^2p^2-6a^2q^2");
  MPoly C = parse_poly("4b^3q+4a^3p-4b^3-4a^3q");
  MPoly disc = B * B - MPoly(4) * A * C;
  for (auto [a, b, q] : {std::tuple{1, 2, 3}, {2, -1, 5}, {3, 7, -2}}) {
    QuarticModel m = appendix_quartic(Rational(a), Rational(b), Rational(q));
    for (long p = -3; p <= 3; ++p) {
      Assignment at{{"a", Rational(a)}, {"b", Rational(b)}, {"q", Rational(q)}, {"p", Rational(p)}};
      CHECK(m.eval(Rational(p)) == disc.eval(at));
    }
    Assignment at{{"a", Rational(a)}, {"b", Rational(b)}, {"q", Rational(q)}, {"p", m.base_u}};
    CHECK(disc.eval(at) == m.base_v * m.base_v);
  }
}

TEST_CASE("appendix multiples of the point") {
  SolutionPair s1 = appendix_n3_generate(Integer(1), Integer(2), Integer(3), Integer(1));
  SolutionPair s2 = appendix_n3_generate(Integer(1), Integer(2), Integer(3), Integer(2));
  CHECK(s2.holds(Constraint::Power4));
  CHECK(s2.holds(Constraint::LinSum));
  CHECK_FALSE(s1 == s2);
}

TEST_CASE("family ids round trip") {
  for (auto id : {FamilyId::N3_T2, FamilyId::N4_T3, FamilyId::N5_T5, FamilyId::N6_T6, FamilyId::VLIFT,
                  FamilyId::APX_N3, FamilyId::APX_N4, FamilyId::APX_N5, FamilyId::APX_N6, FamilyId::LEMMA1_EX})
    CHECK(family_from_string(to_string(id)) == id);
  CHECK_FALSE(family_from_string("N7").has_value());
}
