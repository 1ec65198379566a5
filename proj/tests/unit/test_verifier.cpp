#include <doctest.h>

#include <map>
#include <set>

#include "eqsum4/corpus.hpp"
#include "eqsum4/expr.hpp"
#include "eqsum4/verifier.hpp"
#include "support.hpp"

using namespace eqsum4;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const SymbolicFamily& subject(const std::string& id) {
  static const std::vector<SymbolicFamily> all = all_subjects();
  for (const auto& f : all)
    if (f.id == id) return f;
  FAIL("no subject " << id);
  throw std::logic_error("unreachable");
}

const VerificationReport& report(const std::vector<VerificationReport>& reps, const std::string& id) {
  for (const auto& r : reps)
    if (r.subject == id) return r;
  FAIL("no report " << id);
  throw std::logic_error("unreachable");
}

bool has_note(const VerificationReport& r, const std::string& text) {
  for (const auto& n : r.notes)
    if (n.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("corpus parses and covers every family") {
  const auto& fams = corpus_families();
  std::set<FamilyId> seen;
  for (const auto& f : fams) {
    seen.insert(f.family);
    CHECK(f.source == Source::Printed);
    CHECK(f.xs.size() == f.ys.size());
    CHECK_FALSE(f.claims.empty());
  }
  CHECK(seen.size() == 10);
  CHECK(fams.size() >= 12);
  CHECK(all_subjects().size() >= 10);
  CHECK(parse_corpus(default_corpus_text()).size() == fams.size());
}

TEST_CASE("corpus definitions expand in place") {
  const auto& n4 = subject("N4_T3/printed");
  // f1 at u = 1 is 239, so x2 = (3+1+1-2+1) * 239.
  CHECK(n4.specialize({Rational(1)}).xs[1] == Integer(4 * 239));
  CHECK(n4.params == std::vector<std::string>{"u"});
}

TEST_CASE("corpus parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_corpus(text);
    } catch (const CorpusError& e) {
      return e.line();
    }
    return std::size_t(0);
  };
  CHECK(line_of("[NOPE x]\nclaims = POWER4\nx1 = 1\ny1 = 1\n") == 1);
  CHECK(line_of("[N3_T2 a]\nclaims = POWER5\n") == 2);
  CHECK(line_of("x1 = 3\n") == 1);
  CHECK(line_of("[N3_T2 a]\nclaims = POWER4\nparams = u\nx1 = u+v\ny1 = u\n") == 4);
  CHECK(line_of("[N3_T2 a]\nclaims = POWER4\nx1 = 1\nx3 = 1\ny1 = 1\ny2 = 1\n") == 1);
  CHECK(line_of("[N3_T2 a]\nclaims = POWER4\nx1 = 1\ny1 = 1\n[N3_T2 a]\n") == 5);
  CHECK(line_of("[N3_T2 a]\nclaims = POWER4\nx1 = (1\ny1 = 1\n") == 3);
  CHECK(line_of("[N3_T2 a]\nx1 = 1\ny1 = 1\n") == 1);
  CHECK(line_of("# only a comment\n\n[VLIFT a]\nclaims = LINSUM\nx1 = 2\ny1 = 2\n") == 0);
}

TEST_CASE("numeric verification of the printed n = 3 solutions") {
  std::map<std::string, long> products{{"VLIFT/printed-1", 237336}, {"VLIFT/printed-2", 645624},
                                       {"VLIFT/printed-3", 2708811}};
  for (const auto& [id, prod] : products) {
    auto rep = verify_numeric(subject(id).specialize({}), id);
    CHECK(rep.status(Constraint::Power4) == Status::Holds);
    CHECK(rep.status(Constraint::Product) == Status::Holds);
    CHECK(rep.status(Constraint::LinSum) == Status::NotClaimed);
    CHECK(rep.check(Constraint::Product).value == Integer(prod));
    CHECK_FALSE(rep.trivial);
    CHECK(rep.primitive);
  }
  SolutionPair bad{ints({22, 93, 116}), ints({29, 66, 125}), {Constraint::Power4, Constraint::Product}};
  auto rep = verify_numeric(bad);
  CHECK(rep.status(Constraint::Power4) == Status::Fails);
  REQUIRE(rep.check(Constraint::Power4).witness);
  CHECK(rep.check(Constraint::Power4).witness->first != rep.check(Constraint::Power4).witness->second);
}

TEST_CASE("symbolic verification of the main families") {
  CHECK(verify_symbolic(FamilyId::LEMMA1_EX, Constraint::Power4).status(Constraint::Power4) == Status::Holds);
  for (auto fam : {FamilyId::N3_T2, FamilyId::N4_T3}) {
    for (auto c : {Constraint::Power4, Constraint::Product}) {
      auto rep = verify_symbolic(fam, c);
      CHECK(rep.status(c) == Status::Holds);
      CHECK_FALSE(rep.check(c).residual);
    }
  }
  for (auto fam : {FamilyId::N5_T5, FamilyId::N6_T6})
    for (auto c : {Constraint::Power4, Constraint::Product})
      CHECK(verify_symbolic(fam, c, Source::Construction).status(c) == Status::Holds);
}

TEST_CASE("a broken family is reported with its residual") {
  SymbolicFamily f;
  f.id = "test";
  f.params = {"u"};
  f.claims = {Constraint::Power4};
  f.xs = {parse_poly("u+1"), parse_poly("2")};
  f.ys = {parse_poly("u"), parse_poly("2")};
  auto rep = verify_symbolic(f, Constraint::Power4);
  CHECK(rep.status(Constraint::Power4) == Status::Fails);
  REQUIRE(rep.check(Constraint::Power4).residual);
  CHECK(*rep.check(Constraint::Power4).residual == parse_poly("(u+1)^4-u^4"));
  auto full = verify_family(f);
  CHECK(has_note(full, "holds at 0 of 11"));
}

TEST_CASE("trivial families are detected up to sign") {
  MPoly u = MPoly::variable("u"), v = MPoly::variable("v");
  CHECK(trivial_up_to_sign({u, v}, {-v, u}));
  CHECK_FALSE(trivial_up_to_sign({u, v}, {u, u}));
  CHECK_FALSE(trivial_up_to_sign({u, v + MPoly(1)}, {v, u}));
}

TEST_CASE("specialization agrees with symbolic identities at random points") {
  for (const auto& f : all_subjects()) {
    if (f.is_numeric() || f.n() > 6) continue;
    for (int i = 0; i < 20; ++i) {
      std::vector<Rational> at;
      for (std::size_t j = 0; j < f.params.size(); ++j) at.push_back(testsupport::rand_rational(50));
      SolutionPair sp = f.specialize(at);
      for (auto c : f.claims.list()) {
        bool symbolic = constraint_residual(c, f.xs, f.ys).is_zero();
        if (symbolic) CHECK_MESSAGE(sp.holds(c), f.id);
      }
    }
  }
}

TEST_CASE("statuses are invariant under sign flips and primitive reduction") {
  SolutionPair base = subject("VLIFT/printed-2").specialize({});
  for (int i = 0; i < 50; ++i) {
    SolutionPair sp = base;
    Integer k(testsupport::rand_int(2, 1000));
    for (auto& x : sp.xs) x = x * k;
    for (auto& y : sp.ys) y = y * k;
    CHECK_FALSE(verify_numeric(sp).primitive);
    CHECK(reduce_primitive(sp) == base);
    auto idx = static_cast<std::size_t>(testsupport::rand_int(0, 2));
    sp.xs[idx] = -sp.xs[idx];
    sp.ys[idx] = -sp.ys[idx];
    auto rep = verify_numeric(sp);
    CHECK(rep.status(Constraint::Power4) == Status::Holds);
    CHECK(rep.status(Constraint::Product) == Status::Holds);
    SolutionPair one = sp;
    one.xs[0] = -one.xs[0];
    auto flipped = verify_numeric(one);
    CHECK(flipped.status(Constraint::Power4) == Status::Holds);
    CHECK(flipped.status(Constraint::Product) == Status::Fails);
  }
}

TEST_CASE("printed appendix family at p = 1") {
  SolutionPair sp = subject("APX_N3/printed").specialize({Rational(1)});
  CHECK(sp.xs == ints({392, -196, -196}));
  CHECK(sp.ys == ints({-196, 196, -392}));
  CHECK(sp.holds(Constraint::Power4));
}

TEST_CASE("linear sign patterns") {
  MPoly a = MPoly::variable("a"), b = MPoly::variable("b");
  CHECK(linear_sign_pattern({a, b}, {a, b}) == "x(+,+) y(+,+)");
  CHECK(linear_sign_pattern({a, b}, {b, -a}) == "x(+,+) y(+,-)");
  CHECK_FALSE(linear_sign_pattern({a, b}, {a, a}));
}

TEST_CASE("entry comparison names the differing entries") {
  const auto& printed = subject("N5_T5/printed");
  const auto& built = subject("N5_T5/construction");
  CHECK(entry_mismatches(printed, built) == std::vector<std::string>{"y4"});
  CHECK(entry_mismatches(subject("N3_T2/printed"), subject("N3_T2/construction")).empty());
  CHECK(entry_mismatches(built, built).empty());
}

TEST_CASE("corpus classification") {
  auto reps = classify_corpus();
  REQUIRE(reps.size() == all_subjects().size());
  CHECK(required_hold(reps));
  for (const auto& r : reps) {
    if (r.required()) CHECK_MESSAGE(r.claims_hold(), r.subject);
  }
  for (const auto& f : corpus_families()) CHECK_NOTHROW(report(reps, f.id));

  for (const char* id : {"LEMMA1_EX/printed", "N3_T2/printed", "N4_T3/printed", "N6_T6/printed"}) {
    CHECK(report(reps, id).claims_hold());
    CHECK(has_note(report(reps, id), "entries match"));
  }
  const auto& n5 = report(reps, "N5_T5/printed");
  CHECK(n5.status(Constraint::Power4) == Status::Fails);
  CHECK(has_note(n5, "entries y4 differ"));

  const std::map<std::string, std::string> patterns{
      {"APX_N3/printed", "x(+,-,+) y(+,+,-)"},
      {"APX_N4/printed", "x(+,+,-,+) y(+,-,+,+)"},
      {"APX_N5/printed", "x(+,+,-,+,-) y(-,+,+,+,+)"},
      {"APX_N6/printed", "x(+,-,+,+,+,+) y(-,-,+,+,+,+)"},
  };
  for (const auto& [id, pat] : patterns) {
    const auto& r = report(reps, id);
    CHECK(r.status(Constraint::Power4) == Status::Holds);
    CHECK(r.status(Constraint::LinSum) == Status::Fails);
    CHECK(has_note(r, pat));
  }
}

TEST_CASE("classification is deterministic across thread counts") {
  auto key = [](const std::vector<VerificationReport>& reps) {
    std::vector<std::string> out;
    for (const auto& r : reps) {
      std::string s = r.subject;
      for (const auto& k : r.checks) s += " " + std::string(to_string(k.status));
      for (const auto& n : r.notes) s += " | " + n;
      out.push_back(s);
    }
    return out;
  };
  auto one = key(classify_corpus(corpus_families(), 1));
  CHECK(one == key(classify_corpus(corpus_families(), 4)));
  CHECK(one == key(classify_corpus(corpus_families(), 1)));
}

TEST_CASE("a custom printed corpus is classified") {
  auto fams = parse_corpus("[VLIFT mine]\nclaims = POWER4 PRODUCT\nx1 = 1\nx2 = 2\ny1 = 2\ny2 = 1\n");
  auto reps = classify_corpus(fams);
  const auto& r = report(reps, "VLIFT/mine");
  CHECK(r.claims_hold());
  CHECK(r.trivial);
}
