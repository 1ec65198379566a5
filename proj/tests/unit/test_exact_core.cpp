#include <doctest.h>

#include <sstream>

#include "eqsum4/expr.hpp"
#include "eqsum4/integer.hpp"
#include "eqsum4/mpoly.hpp"
#include "eqsum4/rational.hpp"
#include "support.hpp"

using namespace eqsum4;
using testsupport::rand_big;
using testsupport::rand_int;
using testsupport::rand_poly;
using testsupport::rand_rational;

TEST_CASE("integer decimal round trip") {
  for (int digits : {1, 2, 19, 20, 21, 64, 500, 1000, 1500}) {
    Integer a = rand_big(digits);
    CHECK(Integer::parse(a.str()) == a);
    CHECK(a.digits() == static_cast<std::size_t>(digits));
  }
  CHECK(Integer::parse("-0").str() == "0");
  CHECK(Integer::parse("+17") == Integer(17));
  CHECK_THROWS_AS(Integer::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Integer::parse("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Integer::parse("-"), std::invalid_argument);
}

TEST_CASE("integer arithmetic agrees with 128-bit arithmetic") {
  for (int i = 0; i < 1000; ++i) {
    long a = rand_int(-(1L << 40), 1L << 40), b = rand_int(-(1L << 40), 1L << 40);
    __int128 p = static_cast<__int128>(a) * b;
    Integer ia(a), ib(b);
    Integer prod = ia * ib;
    Integer hi = prod / Integer(1L << 62), lo = prod % Integer(1L << 62);
    CHECK(hi.to_long() == static_cast<long>(p / (static_cast<__int128>(1) << 62)));
    CHECK(lo.to_long() == static_cast<long>(p % (static_cast<__int128>(1) << 62)));
    CHECK((ia + ib).to_long() == a + b);
    CHECK((ia - ib).to_long() == a - b);
  }
  CHECK_THROWS_AS(Integer(1) / Integer(0), DivisionByZero);
  CHECK(gcd(Integer(-12), Integer(18)) == Integer(6));
  CHECK(Integer(635318657).isqrt() == Integer(25205));
  CHECK(Integer(144).is_perfect_square());
  CHECK_FALSE(Integer(-4).is_perfect_square());
}

TEST_CASE("rational canonical form") {
  CHECK(Rational(Integer(1), Integer(2)) + Rational(Integer(1), Integer(3)) ==
        Rational(Integer(5), Integer(6)));
  CHECK((Rational(Integer(3), Integer(6)) * Rational(Integer(2), Integer(5))).str() == "1/5");
  Rational r(Integer(4), Integer(-6));
  CHECK(r.num() == Integer(-2));
  CHECK(r.den() == Integer(3));
  CHECK(Rational(Integer(0), Integer(-7)).den() == Integer(1));
  CHECK(Rational::parse("-10/4").str() == "-5/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK(Rational::parse("9/4").sqrt() == Rational(Integer(3), Integer(2)));
  CHECK_FALSE(Rational::parse("2/9").sqrt().has_value());
}

TEST_CASE("rational field axioms on 1000 random cases") {
  for (int i = 0; i < 1000; ++i) {
    Rational a = rand_rational(), b = rand_rational(), c = rand_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    Rational s = a * b + c;
    CHECK(gcd(s.num(), s.den()) == Integer(1));
    CHECK(s.den().sign() > 0);
    CHECK(Rational::parse(s.str()) == s);
  }
}

TEST_CASE("mpoly ring axioms and evaluation homomorphism") {
  for (int i = 0; i < 1000; ++i) {
    MPoly f = rand_poly(), g = rand_poly(), h = rand_poly();
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    if (i % 4 == 0) {
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
    }
    CHECK((f - f).is_zero());
    Assignment at{{"u", rand_rational(50)}, {"v", rand_rational(50)}, {"w", rand_rational(50)}};
    CHECK((f * g).eval(at) == f.eval(at) * g.eval(at));
    CHECK((f + g).eval(at) == f.eval(at) + g.eval(at));
  }
}

TEST_CASE("mpoly expansion examples") {
  CHECK((parse_poly("(u+1)^2") - parse_poly("u^2+2u+1")).is_zero());
  CHECK(parse_poly("(u-v)(u+v)") == parse_poly("u^2-v^2"));
  CHECK(parse_poly("(u-v)(u+v)").str() == "u^2-v^2");
  CHECK(parse_poly("1+u^2-2u^4+3u^5+u^6").str() == "u^6+3*u^5-2*u^4+u^2+1");
  CHECK(parse_poly("0").str() == "0");
  CHECK(parse_poly("-u^{11}v+2").str() == "-u^11*v+2");
  CHECK(parse_poly("2vu^3") == parse_poly("2*v*u^3"));
  CHECK(parse_poly("-u^2") == -parse_poly("u^2"));
  CHECK(parse_poly("u-0u") == parse_poly("u"));
  CHECK(parse_poly("(u+v)(u-v)").variables() == std::vector<std::string>{"u", "v"});
  CHECK(parse_poly("u+v-v").variables() == std::vector<std::string>{"u"});
}

TEST_CASE("mpoly evaluation examples") {
  auto at2 = Assignment{{"u", Rational(2)}};
  CHECK(parse_poly("u^7+u^5-2u^3-3u^2+u").eval(at2) == Rational(134));
  CHECK(parse_poly("3u^5+u^2+u^6-2u^4+1").eval(at2) == Rational(133));
  CHECK(MPoly().eval({}) == Rational(0));
  CHECK(MPoly().eval(at2) == Rational(0));
  CHECK(parse_poly("u^2+u").eval({{"u", Rational::parse("1/2")}}) == Rational::parse("3/4"));
  try {
    parse_poly("u+v").eval(at2);
    FAIL("expected MissingVariable");
  } catch (const MissingVariable& e) {
    CHECK(e.name() == "v");
  }
}

TEST_CASE("expand then evaluate equals evaluate the tree") {
  // Hand-rolled Horner evaluation as the independent oracle.
  const char* x1 = "(u^6-3u^5-2u^4+u^2+1)(u^6+u^4-2u^2-3u+1)u";
  Expr e = parse_expr(x1);
  long u = 2;
  long a = ((((((u - 3) * u - 2) * u + 0) * u + 1) * u + 0) * u + 1);
  long b = ((((((u + 0) * u + 1) * u + 0) * u - 2) * u - 3) * u + 1);
  CHECK(poly_expand(e).eval({{"u", Rational(2)}}) == Rational(a * b * u));
  CHECK(eval_expr(e, {{"u", Rational(2)}}) == Rational(a * b * u));
  for (int i = 0; i < 20; ++i) {
    Rational x = rand_rational(30);
    CHECK(poly_expand(e).eval({{"u", x}}) == eval_expr(e, {{"u", x}}));
  }
}

TEST_CASE("parser errors carry a position") {
  CHECK_THROWS_AS(parse_expr("u+"), ParseError);
  CHECK_THROWS_AS(parse_expr("(u+1"), ParseError);
  CHECK_THROWS_AS(parse_expr("u^"), ParseError);
  CHECK_THROWS_AS(parse_expr("u^{2"), ParseError);
  CHECK_THROWS_AS(parse_expr("u$"), ParseError);
  try {
    parse_expr("u+)");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("mpoly substitution and coefficients") {
  MPoly f = parse_poly("u^3+2uv+v^2");
  CHECK(f.substitute("u", parse_poly("v+1")) == parse_poly("(v+1)^3+2(v+1)v+v^2"));
  CHECK(f.degree("u") == 3);
  CHECK(f.degree("z") == 0);
  CHECK(f.total_degree() == 3);
  CHECK(f.coefficient("u", 1) == parse_poly("2v"));
  CHECK(f.coefficient("u", 0) == parse_poly("v^2"));
  // den^3 * f(u = a/b)
  CHECK(f.substitute_fraction("u", parse_poly("a"), parse_poly("b"), 3) ==
        parse_poly("a^3+2avb^2+v^2b^3"));
  CHECK(parse_poly("6u^2+4").content() == Integer(2));
  CHECK(parse_poly("6u^2+4").divexact(Integer(2)) == parse_poly("3u^2+2"));
  std::ostringstream os;
  os << parse_poly("u-1");
  CHECK(os.str() == "u-1");
}

TEST_CASE("mpoly variable limit") {
  MPoly f(1);
  const std::string names = "abcdefghijkl";
  for (char c : names) f *= MPoly::variable(std::string(1, c));
  CHECK(f.variables().size() == 12);
  CHECK_THROWS_AS(f * MPoly::variable("m1"), std::length_error);
}

TEST_CASE("mpoly exact division") {
  for (int i = 0; i < 200; ++i) {
    MPoly f = rand_poly(), g = rand_poly(3, 2);
    if (g.is_zero()) continue;
    auto q = (f * g).divide(g);
    REQUIRE(q.has_value());
    CHECK(*q == f);
  }
  CHECK_FALSE(parse_poly("u^2+1").divide(parse_poly("u+1")).has_value());
  CHECK_FALSE(parse_poly("3u").divide(parse_poly("2u")).has_value());
  CHECK(parse_poly("u^2-v^2").divide(parse_poly("u-v")) == parse_poly("u+v"));
  CHECK_THROWS_AS(parse_poly("u").divide(MPoly()), DivisionByZero);
}
