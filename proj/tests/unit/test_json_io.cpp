#include <doctest.h>

#include "eqsum4/families.hpp"
#include "eqsum4/json_io.hpp"
#include "support.hpp"

using namespace eqsum4;

TEST_CASE("quadruple json") {
  Quadruple q{Integer(134), Integer(133), Integer(59), Integer(158)};
  CHECK(to_json(q).dump() == R"(["134","133","59","158"])");
  CHECK(quadruple_from_json(to_json(q)) == q);
  CHECK(quadruple_from_json(Json::parse("[134, 133, 59, 158]")) == q);
  CHECK_THROWS_AS(quadruple_from_json(Json::parse("[1, 2, 3]")), JsonError);
  CHECK_THROWS_AS(quadruple_from_json(Json::parse("[1.5, 2, 3, 4]")), JsonError);
  CHECK_THROWS_AS(quadruple_from_json(Json::parse(R"(["1x", "2", "3", "4"])")), JsonError);
}

TEST_CASE("solution pair json") {
  SolutionPair sp = n3_family(Quadruple{Integer(134), Integer(133), Integer(59), Integer(158)});
  Json j = to_json(sp);
  CHECK(j.dump() ==
        R"({"n":3,"x":["7906","21172","17689"],"y":["7847","21014","17956"],"flags":["POWER4","PRODUCT"],)"
        R"("trivial":false,"primitive":true})");
  CHECK(solution_from_json(j) == sp);
  CHECK_THROWS_AS(solution_from_json(Json::parse(R"({"x":["1"],"y":["1","2"]})")), JsonError);
  CHECK_THROWS_AS(solution_from_json(Json::parse(R"({"n":3,"x":["1"],"y":["1"]})")), JsonError);
  CHECK_THROWS_AS(solution_from_json(Json::parse(R"({"x":["1"],"y":["1"],"flags":["CUBE"]})")), JsonError);
  CHECK_THROWS_AS(solution_from_json(Json::parse(R"({"y":["1"]})")), JsonError);
}

TEST_CASE("solution pair json round trips with large entries") {
  for (int i = 0; i < 200; ++i) {
    SolutionPair sp;
    auto n = static_cast<std::size_t>(testsupport::rand_int(1, 6));
    for (std::size_t k = 0; k < n; ++k) {
      sp.xs.push_back(testsupport::rand_big(static_cast<int>(testsupport::rand_int(1, 80))));
      sp.ys.push_back(testsupport::rand_big(static_cast<int>(testsupport::rand_int(1, 80))));
    }
    for (auto c : kAllConstraints)
      if (testsupport::rand_int(0, 1)) sp.flags.set(c);
    CHECK(solution_from_json(Json::parse(to_json(sp).dump())) == sp);
  }
  Quadruple big = point_to_quadruple(Rational(2), Rational(1), Integer(3));
  CHECK(quadruple_from_json(Json::parse(to_json(big).dump())) == big);
}

TEST_CASE("curve json round trips") {
  auto trace = trace_point_to_quadruple(Rational(2), Rational(1), Integer(2));
  CHECK(weierstrass_from_json(Json::parse(to_json(trace.curve).dump())).a4 == trace.curve.a4);
  auto c = weierstrass_from_json(to_json(trace.curve));
  CHECK((c.a1 == trace.curve.a1 && c.a2 == trace.curve.a2 && c.a3 == trace.curve.a3 && c.a6 == trace.curve.a6));
  CHECK(point_from_json(to_json(trace.multiple)) == trace.multiple);
  CHECK(point_from_json(to_json(CurvePoint::infinity())) == CurvePoint::infinity());
  QuarticModel q = quartic_from_json(Json::parse(to_json(trace.quartic).dump()));
  CHECK(q.coeffs == trace.quartic.coeffs);
  CHECK(q.base_u == trace.quartic.base_u);
  CHECK(q.base_v == trace.quartic.base_v);
  CHECK(to_json(trace.quartic)["a4"] == "-1404");
  CHECK(to_json(trace.quartic)["point"][0] == "7/9");
  Json t = to_json(trace);
  CHECK(quadruple_from_json(t["quadruple"]) == trace.quadruple);
}

TEST_CASE("json documents") {
  CHECK(parse_json_documents(R"({"a":1})").size() == 1);
  CHECK(parse_json_documents(R"([{"a":1},{"a":2}])").size() == 2);
  CHECK(parse_json_documents("{\"a\":1}\n\n{\"a\":2}\n{\"a\":3}\n").size() == 3);
  CHECK_THROWS_AS(parse_json_documents("{\"a\":1}\n{oops\n"), JsonError);
  CHECK_THROWS_AS(parse_json_documents(""), JsonError);
}

TEST_CASE("report json") {
  SolutionPair sp = n3_family(Quadruple{Integer(134), Integer(133), Integer(59), Integer(158)});
  Json r = verify_report({verify_numeric(sp, "n3")});
  CHECK(r["schema"] == kReportSchema);
  CHECK(r["all_hold"] == true);
  CHECK(r["results"][0]["checks"]["PRODUCT"]["value"] == "2960887982248");
  CHECK(r["results"][0]["checks"]["LINSUM"]["status"] == "not-claimed");
  sp.ys[0] += Integer(1);
  Json bad = verify_report({verify_numeric(sp)});
  CHECK(bad["all_hold"] == false);
  CHECK(bad["results"][0]["checks"]["POWER4"]["sides"].size() == 2);
}
