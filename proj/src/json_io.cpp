#include "eqsum4/json_io.hpp"

#include <sstream>

namespace eqsum4 {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw JsonError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<Integer> integers_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw JsonError(std::string(what) + " must be an array");
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

Json integers_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json flags_to_json(const Constraints& c) {
  Json out = Json::array();
  for (auto k : c.list()) out.push_back(std::string(to_string(k)));
  return out;
}

Json check_to_json(const ConstraintCheck& k) {
  Json out;
  out["status"] = std::string(to_string(k.status));
  if (k.value) out["value"] = to_json(*k.value);
  if (k.witness) out["sides"] = Json::array({to_json(k.witness->first), to_json(k.witness->second)});
  if (k.residual) {
    out["residual_terms"] = k.residual->term_count();
    out["residual"] = k.residual->str();
  }
  return out;
}

}  // namespace

Json to_json(const Integer& v) { return v.str(); }
Json to_json(const Rational& v) { return v.str(); }

Integer integer_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Integer::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw JsonError("bad integer \"" + j.get<std::string>() + "\"");
    }
  }
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw JsonError("expected an integer as a decimal string, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw JsonError("bad rational \"" + j.get<std::string>() + "\"");
    }
  }
  return Rational(integer_from_json(j));
}

Json to_json(const Quadruple& q) { return Json::array({to_json(q.p), to_json(q.q), to_json(q.r), to_json(q.w)}); }

Quadruple quadruple_from_json(const Json& j) {
  auto v = integers_from_json(j, "quadruple");
  if (v.size() != 4) throw JsonError("a quadruple has 4 entries");
  return {v[0], v[1], v[2], v[3]};
}

Json to_json(const SolutionPair& sp) {
  Json out;
  out["n"] = sp.n();
  out["x"] = integers_to_json(sp.xs);
  out["y"] = integers_to_json(sp.ys);
  out["flags"] = flags_to_json(sp.flags);
  out["trivial"] = sp.is_trivial();
  out["primitive"] = sp.is_primitive();
  return out;
}

SolutionPair solution_from_json(const Json& j) {
  SolutionPair sp;
  sp.xs = integers_from_json(field(j, "x"), "x");
  sp.ys = integers_from_json(field(j, "y"), "y");
  if (sp.xs.size() != sp.ys.size()) throw JsonError("x and y have different lengths");
  if (sp.xs.empty()) throw JsonError("x and y are empty");
  if (j.contains("n")) {
    const Json& n = j["n"];
    if (!n.is_number_unsigned() || n.get<std::size_t>() != sp.xs.size())
      throw JsonError("n does not match the number of entries");
  }
  if (j.contains("flags")) {
    const Json& f = j["flags"];
    if (!f.is_array()) throw JsonError("flags must be an array");
    for (const auto& c : f) {
      if (!c.is_string()) throw JsonError("flags must be strings");
      auto con = constraint_from_string(c.get<std::string>());
      if (!con) throw JsonError("unknown constraint \"" + c.get<std::string>() + "\"");
      sp.flags.set(*con);
    }
  }
  return sp;
}

Json to_json(const CurvePoint& p) {
  if (p.infinite) return "infinity";
  return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

CurvePoint point_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return CurvePoint::infinity();
  return CurvePoint::affine(rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
}

Json to_json(const WeierstrassModel& c) {
  return Json{{"a1", to_json(c.a1)}, {"a2", to_json(c.a2)}, {"a3", to_json(c.a3)},
              {"a4", to_json(c.a4)}, {"a6", to_json(c.a6)}};
}

WeierstrassModel weierstrass_from_json(const Json& j) {
  return {rational_from_json(field(j, "a1")), rational_from_json(field(j, "a2")), rational_from_json(field(j, "a3")),
          rational_from_json(field(j, "a4")), rational_from_json(field(j, "a6"))};
}

Json to_json(const QuarticModel& q) {
  Json out;
  const char* names[] = {"a4", "a3", "a2", "a1", "a0"};
  for (int i = 0; i < 5; ++i) out[names[i]] = to_json(q.coeffs[static_cast<std::size_t>(i)]);
  out["point"] = Json::array({to_json(q.base_u), to_json(q.base_v)});
  return out;
}

QuarticModel quartic_from_json(const Json& j) {
  QuarticModel q;
  const char* names[] = {"a4", "a3", "a2", "a1", "a0"};
  for (int i = 0; i < 5; ++i) q.coeffs[static_cast<std::size_t>(i)] = rational_from_json(field(j, names[i]));
  const Json& pt = field(j, "point");
  if (!pt.is_array() || pt.size() != 2) throw JsonError("point must be [U0, V0]");
  q.base_u = rational_from_json(pt[0]);
  q.base_v = rational_from_json(pt[1]);
  return q;
}

Json to_json(const CurveTrace& t) {
  Json out;
  out["u"] = to_json(t.u);
  out["v"] = to_json(t.v);
  out["m"] = to_json(t.m);
  out["quartic"] = to_json(t.quartic);
  out["weierstrass"] = to_json(t.curve);
  out["P"] = to_json(t.base_image);
  out["mP"] = to_json(t.multiple);
  out["recovered"] = Json::array({to_json(t.recovered.u), to_json(t.recovered.v)});
  out["k"] = to_json(t.k);
  out["n"] = to_json(t.n);
  out["quadratic"] = Json{{"A", to_json(t.quadratic.a)}, {"B", to_json(t.quadratic.b)}, {"C", to_json(t.quadratic.c)}};
  Json roots = Json::array();
  for (const auto& r : t.roots) roots.push_back(to_json(r));
  out["t_roots"] = roots;
  out["t"] = to_json(t.t);
  out["quadruple"] = to_json(t.quadruple);
  return out;
}

Json to_json(const SymbolicFamily& f) {
  Json out;
  out["id"] = f.id;
  out["family"] = std::string(to_string(f.family));
  out["source"] = std::string(to_string(f.source));
  out["claims"] = flags_to_json(f.claims);
  out["params"] = f.params;
  Json xs = Json::array(), ys = Json::array();
  for (const auto& x : f.xs) xs.push_back(x.str());
  for (const auto& y : f.ys) ys.push_back(y.str());
  out["x"] = xs;
  out["y"] = ys;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["subject"] = r.subject;
  out["kind"] = r.symbolic ? "symbolic" : "numeric";
  if (r.source) out["source"] = std::string(to_string(*r.source));
  out["n"] = r.n;
  if (r.symbolic) out["params"] = r.params;
  Json checks = Json::object();
  for (const auto& k : r.checks) checks[std::string(to_string(k.constraint))] = check_to_json(k);
  out["checks"] = checks;
  out["claims_hold"] = r.claims_hold();
  out["required"] = r.required();
  out["trivial"] = r.trivial;
  out["primitive"] = r.primitive;
  out["degenerate"] = r.degenerate;
  if (!r.specializations.empty()) {
    Json specs = Json::array();
    for (const auto& s : r.specializations) {
      Json one;
      Json at = Json::array();
      for (const auto& a : s.at) at.push_back(to_json(a));
      one["at"] = at;
      Json st = Json::array();
      for (auto x : s.statuses) st.push_back(std::string(to_string(x)));
      one["statuses"] = st;
      one["trivial"] = s.trivial;
      specs.push_back(one);
    }
    out["specializations"] = specs;
  }
  out["notes"] = r.notes;
  return out;
}

Json corpus_report(const std::vector<VerificationReport>& reports) {
  Json out;
  out["schema"] = kReportSchema;
  out["kind"] = "corpus";
  Json subjects = Json::array();
  for (const auto& r : reports) subjects.push_back(to_json(r));
  out["subjects"] = subjects;
  out["required_hold"] = required_hold(reports);
  return out;
}

Json verify_report(const std::vector<VerificationReport>& reports) {
  Json out;
  out["schema"] = kReportSchema;
  out["kind"] = "verify";
  Json results = Json::array();
  bool all = true;
  for (const auto& r : reports) {
    results.push_back(to_json(r));
    all = all && r.claims_hold();
  }
  out["results"] = results;
  out["all_hold"] = all;
  return out;
}

std::vector<Json> parse_json_documents(const std::string& text) {
  auto unwrap = [](Json j) {
    std::vector<Json> out;
    if (j.is_array())
      for (auto& e : j) out.push_back(std::move(e));
    else
      out.push_back(std::move(j));
    return out;
  };
  try {
    return unwrap(Json::parse(text));
  } catch (const Json::parse_error&) {
  }
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      for (auto& j : unwrap(Json::parse(line))) out.push_back(std::move(j));
    } catch (const Json::parse_error& e) {
      throw JsonError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw JsonError("no JSON input");
  return out;
}

}  // namespace eqsum4
