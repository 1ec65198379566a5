#include "eqsum4/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <map>
#include <set>
#include <sstream>

#include "eqsum4/corpus_data.hpp"
#include "eqsum4/expr.hpp"

namespace eqsum4 {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == Expr::Kind::Symbol) out.insert(e.name());
  for (const auto& c : e.children()) collect_symbols(c, out);
}

struct Pending {
  SymbolicFamily fam;
  std::size_t line = 0;
  bool has_claims = false;
  std::map<std::string, Expr, std::less<>> lets;
  std::map<std::size_t, std::pair<Expr, std::size_t>> xs, ys;  // index -> (expr, line)
};

std::vector<MPoly> expand_side(std::map<std::size_t, std::pair<Expr, std::size_t>>& side, char which,
                               const std::set<std::string>& params, std::size_t header_line) {
  std::vector<MPoly> out;
  std::size_t want = 1;
  for (auto& [idx, entry] : side) {
    if (idx != want)
      throw CorpusError(std::string("missing entry ") + which + std::to_string(want), header_line);
    std::set<std::string> syms;
    collect_symbols(entry.first, syms);
    for (const auto& s : syms)
      if (!params.count(s))
        throw CorpusError("undeclared parameter '" + s + "' in " + which + std::to_string(idx), entry.second);
    out.push_back(poly_expand(entry.first));
    ++want;
  }
  return out;
}

SymbolicFamily finish(Pending& p) {
  if (!p.has_claims) throw CorpusError("subject " + p.fam.id + " has no claims", p.line);
  if (p.xs.empty()) throw CorpusError("subject " + p.fam.id + " has no entries", p.line);
  if (p.xs.size() != p.ys.size())
    throw CorpusError("subject " + p.fam.id + " has " + std::to_string(p.xs.size()) + " x entries and " +
                          std::to_string(p.ys.size()) + " y entries",
                      p.line);
  std::set<std::string> params(p.fam.params.begin(), p.fam.params.end());
  p.fam.xs = expand_side(p.xs, 'x', params, p.line);
  p.fam.ys = expand_side(p.ys, 'y', params, p.line);
  return std::move(p.fam);
}

MPoly var(const char* n) { return MPoly::variable(n); }

SymbolicFamily make(FamilyId f, Source src, Constraints claims, std::vector<std::string> params,
                    std::vector<MPoly> xs, std::vector<MPoly> ys) {
  SymbolicFamily s;
  s.id = std::string(to_string(f)) + "/" + std::string(to_string(src));
  s.family = f;
  s.source = src;
  s.claims = claims;
  s.params = std::move(params);
  s.xs = std::move(xs);
  s.ys = std::move(ys);
  return s;
}

template <class S>
SymbolicFamily make(FamilyId f, Source src, Constraints claims, std::vector<std::string> params, S sides) {
  return make(f, src, claims, std::move(params), std::move(sides.xs), std::move(sides.ys));
}

const Constraints kPowerProduct{Constraint::Power4, Constraint::Product};

SymbolicFamily appendix_construction() {
  // a = 1; the constraints are homogeneous in (a, b, t) jointly, so a = 1
  // loses no generality over a != 0.
  const MPoly b = var("b"), q = var("q"), one(1);
  const MPoly p = -(b.pow(3) * q) + b.pow(3) + q;
  const MPoly v0 = MPoly(6) * b.pow(2) * (q - one) * (one - b) *
                   (one + q + b - q * b + b.pow(2) - b.pow(2) * q - b.pow(3) * q + b.pow(3));
  const MPoly A = MPoly(4) * p.pow(3) + MPoly(4) * b * q.pow(3) - MPoly(4) * q.pow(3) - MPoly(4) * b;
  const MPoly B = MPoly(6) * b.pow(2) * q.pow(2) - MPoly(6) * b.pow(2) + MPoly(6) * p.pow(2) -
                  MPoly(6) * q.pow(2);
  // t = (-B +- v0) / (2A); entries scaled by 2A.
  const MPoly td = MPoly(2) * A;
  for (int sign : {1, -1}) {
    MPoly tn = -B + MPoly(sign) * v0;
    auto s = appendix_construct(td, b * td, p, q, tn);
    if (!trivial_up_to_sign(s.xs, s.ys))
      return make(FamilyId::APX_N3, Source::Construction, {Constraint::Power4, Constraint::LinSum},
                  {"b", "q"}, std::move(s));
  }
  throw std::logic_error("appendix construction is trivial for both roots");
}

std::vector<SymbolicFamily> build_constructions() {
  const auto& [p, q, r, w] = derived_quadruple_polys();
  std::map<std::string, MPoly, std::less<>> to_v{{"u", var("v")}};
  const MPoly pv = p.substitute(to_v), qv = q.substitute(to_v), rv = r.substitute(to_v), wv = w.substitute(to_v);

  std::vector<SymbolicFamily> out;
  out.push_back(make(FamilyId::LEMMA1_EX, Source::Construction, {Constraint::Power4}, {"u"}, {p, q}, {r, w}));
  auto n3 = n3_construct(p, q, r, w);
  out.push_back(make(FamilyId::N3_T2, Source::Construction, kPowerProduct, {"u"}, n3));
  out.push_back(make(FamilyId::N4_T3, Source::Construction, kPowerProduct, {"u"}, n4_construct(p, q, r, w, MPoly(1))));
  // roles (p,q,r) = (x3,x2,x1), (k,m,n) = (y1,y3,y2)
  out.push_back(make(FamilyId::N5_T5, Source::Construction, kPowerProduct, {"u"},
                     n5_construct(n3.xs[2], n3.xs[1], n3.xs[0], n3.ys[0], n3.ys[2], n3.ys[1])));
  out.push_back(make(FamilyId::N6_T6, Source::Construction, kPowerProduct, {"u", "v"},
                     n6_construct(p, q, r, w, pv, qv, rv, wv)));
  out.push_back(make(FamilyId::VLIFT, Source::Construction, kPowerProduct, {"u"}, vlift_construct(r, w, p, q)));
  out.push_back(appendix_construction());
  return out;
}

std::vector<SymbolicFamily> build_generics() {
  const MPoly p = var("p"), q = var("q"), r = var("r"), w = var("w"), m = var("m");
  const MPoly k = var("k"), n = var("n"), s = var("s"), t = var("t"), a = var("a"), b = var("b");
  const Constraints product{Constraint::Product};
  std::vector<SymbolicFamily> out;
  out.push_back(make(FamilyId::N3_T2, Source::Generic, product, {"p", "q", "r", "w"}, n3_construct(p, q, r, w)));
  out.push_back(make(FamilyId::N4_T3, Source::Generic, product, {"m", "p", "q", "r", "w"},
                     n4_construct(p, q, r, w, m)));
  out.push_back(make(FamilyId::N5_T5, Source::Generic, product, {"k", "m", "n", "p", "q", "r"},
                     n5_construct(p, q, r, k, m, n)));
  out.push_back(make(FamilyId::N6_T6, Source::Generic, product, {"m", "n", "p", "q", "r", "s", "t", "w"},
                     n6_construct(p, q, m, n, r, s, t, w)));
  out.push_back(make(FamilyId::VLIFT, Source::Generic, product, {"r", "s", "u", "v"},
                     vlift_construct(r, s, var("u"), var("v"))));
  out.push_back(make(FamilyId::APX_N3, Source::Generic, {Constraint::LinSum}, {"a", "b", "p", "q", "t"},
                     appendix_construct(a, b, p, q, t)));
  return out;
}

}  // namespace

bool trivial_up_to_sign(const std::vector<MPoly>& xs, const std::vector<MPoly>& ys) {
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& x : xs) {
    bool found = false;
    for (std::size_t j = 0; j < ys.size() && !found; ++j)
      if (!used[j] && (x == ys[j] || x == -ys[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

std::string_view to_string(Source s) {
  switch (s) {
    case Source::Printed:
      return "printed";
    case Source::Construction:
      return "construction";
    case Source::Generic:
      return "generic";
  }
  return "?";
}

SolutionPair SymbolicFamily::specialize(const std::vector<Rational>& values) const {
  if (values.size() != params.size())
    throw std::invalid_argument(id + ": expected " + std::to_string(params.size()) + " parameter values, got " +
                                std::to_string(values.size()));
  Assignment at;
  for (std::size_t i = 0; i < params.size(); ++i) at[params[i]] = values[i];
  std::vector<Rational> xv, yv;
  Integer den(1);
  for (const auto& x : xs) {
    xv.push_back(x.eval(at));
    den = lcm(den, xv.back().den());
  }
  for (const auto& y : ys) {
    yv.push_back(y.eval(at));
    den = lcm(den, yv.back().den());
  }
  SolutionPair sp;
  sp.flags = claims;
  for (const auto& x : xv) sp.xs.push_back(x.num() * den.divexact(x.den()));
  for (const auto& y : yv) sp.ys.push_back(y.num() * den.divexact(y.den()));
  return sp;
}

std::string_view default_corpus_text() { return detail::kCorpusText; }

std::vector<SymbolicFamily> parse_corpus(std::string_view text) {
  std::vector<SymbolicFamily> out;
  std::set<std::string> ids;
  std::optional<Pending> cur;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw CorpusError("unterminated subject header", lineno);
      auto w = words(line.substr(1, line.size() - 2));
      if (w.size() != 2) throw CorpusError("subject header must be [FAMILY label]", lineno);
      auto fam = family_from_string(w[0]);
      if (!fam) throw CorpusError("unknown family '" + w[0] + "'", lineno);
      if (cur) out.push_back(finish(*cur));
      cur.emplace();
      cur->line = lineno;
      cur->fam.id = w[0] + "/" + w[1];
      cur->fam.family = *fam;
      cur->fam.source = Source::Printed;
      if (!ids.insert(cur->fam.id).second) throw CorpusError("duplicate subject " + cur->fam.id, lineno);
      continue;
    }

    if (!cur) throw CorpusError("entry outside a subject", lineno);
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw CorpusError("expected key = value", lineno);
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) throw CorpusError("empty value for '" + key + "'", lineno);

    try {
      if (key == "claims") {
        for (const auto& c : words(value)) {
          auto con = constraint_from_string(c);
          if (!con) throw CorpusError("unknown constraint '" + c + "'", lineno);
          cur->fam.claims.set(*con);
        }
        cur->has_claims = true;
      } else if (key == "params") {
        for (const auto& v : words(value)) {
          if (!is_identifier(v)) throw CorpusError("bad parameter name '" + v + "'", lineno);
          cur->fam.params.push_back(v);
        }
      } else if (key.rfind("let ", 0) == 0) {
        std::string name(trim(std::string_view(key).substr(4)));
        if (!is_identifier(name)) throw CorpusError("bad definition name '" + name + "'", lineno);
        cur->lets[name] = parse_expr(value).bind(cur->lets);
      } else if ((key[0] == 'x' || key[0] == 'y') && key.size() > 1 &&
                 std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        std::size_t idx = std::stoul(key.substr(1));
        auto& side = key[0] == 'x' ? cur->xs : cur->ys;
        if (idx == 0 || side.count(idx)) throw CorpusError("bad or repeated entry " + key, lineno);
        side.emplace(idx, std::pair{parse_expr(value).bind(cur->lets), lineno});
      } else {
        throw CorpusError("unknown key '" + key + "'", lineno);
      }
    } catch (const ParseError& e) {
      throw CorpusError(e.what(), lineno);
    }
  }
  if (cur) out.push_back(finish(*cur));
  return out;
}

const std::vector<SymbolicFamily>& corpus_families() {
  static const std::vector<SymbolicFamily> fams = parse_corpus(default_corpus_text());
  return fams;
}

const std::array<MPoly, 4>& derived_quadruple_polys() {
  static const std::array<MPoly, 4> polys = [] {
    const MPoly u = var("u"), v(1);
    const MPoly k = u.pow(3) - v, n = u.pow(3) + v;
    const MPoly tn = MPoly(3) * u.pow(2);
    const MPoly td = u.pow(6) - MPoly(2) * u.pow(4) - MPoly(2) * u.pow(2) + MPoly(1);
    // den * (kt+u, nt+v, kt-v, nt+u)
    return std::array<MPoly, 4>{k * tn + u * td, n * tn + v * td, k * tn - v * td, n * tn + u * td};
  }();
  return polys;
}

const std::vector<SymbolicFamily>& construction_families() {
  static const std::vector<SymbolicFamily> fams = build_constructions();
  return fams;
}

const std::vector<SymbolicFamily>& generic_identities() {
  static const std::vector<SymbolicFamily> fams = build_generics();
  return fams;
}

std::vector<SymbolicFamily> all_subjects(const std::vector<SymbolicFamily>& printed) {
  std::vector<SymbolicFamily> all = printed;
  for (const auto& f : construction_families()) all.push_back(f);
  for (const auto& f : generic_identities()) all.push_back(f);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return all;
}

}  // namespace eqsum4
