#include "eqsum4/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "eqsum4/corpus.hpp"
#include "eqsum4/families.hpp"
#include "eqsum4/json_io.hpp"
#include "eqsum4/quartic_elliptic.hpp"
#include "eqsum4/search.hpp"
#include "eqsum4/verifier.hpp"

namespace eqsum4 {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": not a rational number: " + text);
  }
}

Integer integer_arg(const std::string& name, const std::string& text) {
  try {
    return Integer::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": not an integer: " + text);
  }
}

Quadruple quadruple_arg(const std::string& text) {
  std::vector<Integer> v;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) v.push_back(integer_arg("quad", part));
  if (v.size() != 4) throw UsageError("--quad takes p,q,r,w");
  return {v[0], v[1], v[2], v[3]};
}

std::string join(const std::vector<Integer>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].str();
  return out;
}

std::string flag_words(const Constraints& c) {
  std::string out;
  for (auto k : c.list()) out += (out.empty() ? "" : " ") + std::string(to_string(k));
  return out;
}

void print_pairs(std::ostream& out, const std::vector<SolutionPair>& pairs, const std::string& format) {
  if (format == "json") {
    for (const auto& sp : pairs) out << to_json(sp).dump() << "\n";
  } else if (format == "csv") {
    std::size_t n = pairs.empty() ? 0 : pairs.front().n();
    out << "n";
    for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
    for (std::size_t i = 1; i <= n; ++i) out << ",y" << i;
    out << ",flags,trivial,primitive\n";
    for (const auto& sp : pairs)
      out << sp.n() << "," << join(sp.xs, ",") << "," << join(sp.ys, ",") << "," << flag_words(sp.flags) << ","
          << (sp.is_trivial() ? "true" : "false") << "," << (sp.is_primitive() ? "true" : "false") << "\n";
  } else {
    for (const auto& sp : pairs) {
      out << "x = (" << join(sp.xs, ", ") << ")\n";
      out << "y = (" << join(sp.ys, ", ") << ")\n";
      out << "flags: " << flag_words(sp.flags) << "\n";
      out << "trivial: " << (sp.is_trivial() ? "yes" : "no") << ", primitive: " << (sp.is_primitive() ? "yes" : "no")
          << "\n";
    }
  }
}

std::string status_line(const VerificationReport& r) {
  std::string line = r.subject.empty() ? "(pair)" : r.subject;
  for (const auto& k : r.checks) line += "  " + std::string(to_string(k.constraint)) + "=" + std::string(to_string(k.status));
  if (r.trivial) line += "  trivial";
  if (!r.primitive) line += "  non-primitive";
  if (r.degenerate) line += "  degenerate";
  return line;
}

void print_reports_text(std::ostream& out, const std::vector<VerificationReport>& reps) {
  for (const auto& r : reps) {
    out << status_line(r) << "\n";
    for (const auto& n : r.notes) out << "    " << n << "\n";
  }
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  return read_all(f);
}

struct GenerateArgs {
  std::string family;
  std::string u = "2", v, m = "1", a = "1", b, q, mult = "1";
  std::vector<std::string> quads;
  bool raw = false;
  std::string format = "json";
};

Quadruple seed_quadruple(const GenerateArgs& g, std::size_t which, const Rational& u, const Rational& v,
                         const Integer& mult) {
  if (g.quads.size() > which) return quadruple_arg(g.quads[which]);
  return point_to_quadruple(u, v, mult);
}

SolutionPair run_generate(const GenerateArgs& g) {
  const bool primitive = !g.raw;
  const Integer mult = integer_arg("mult", g.mult);
  const std::string fam = [&] {
    std::string f = g.family;
    std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::tolower(c); });
    return f;
  }();
  if (fam == "n6") {
    if (g.quads.size() == 1) throw UsageError("--family n6 takes two --quad options or --u and --v");
    Rational u = rational_arg("u", g.u);
    Rational v = rational_arg("v", g.v.empty() ? "3" : g.v);
    Quadruple qa = g.quads.size() >= 2 ? quadruple_arg(g.quads[0]) : point_to_quadruple(u, Rational(1), mult);
    Quadruple qb = g.quads.size() >= 2 ? quadruple_arg(g.quads[1]) : point_to_quadruple(v, Rational(1), mult);
    return n6_family(qa, qb, primitive);
  }
  if (fam == "appendix" || fam == "apx_n3") {
    if (g.b.empty() || g.q.empty()) throw UsageError("--family appendix needs --b and --q");
    return appendix_n3_generate(integer_arg("a", g.a), integer_arg("b", g.b), integer_arg("q", g.q), mult, primitive);
  }
  Rational u = rational_arg("u", g.u);
  Rational v = rational_arg("v", g.v.empty() ? "1" : g.v);
  Quadruple qd = seed_quadruple(g, 0, u, v, mult);
  if (fam == "lemma1" || fam == "lemma1_ex") {
    if (!qd.satisfies_equation()) throw UsageError("--quad does not satisfy p^4+q^4=r^4+w^4");
    SolutionPair sp{{qd.p, qd.q}, {qd.r, qd.w}, {Constraint::Power4}};
    return primitive ? reduce_primitive(sp) : sp;
  }
  if (fam == "n3" || fam == "n3_t2") return n3_family(qd, primitive);
  if (fam == "n4" || fam == "n4_t3") return n4_family(qd, integer_arg("m", g.m), primitive);
  if (fam == "n5" || fam == "n5_t5") return n5_family(sextuple_from_n3(n3_family(qd)), primitive);
  if (fam == "vlift") return vandemergel_lift(qd.p, qd.q, qd.r, qd.w, primitive);
  throw UsageError("unknown family " + g.family);
}

Json curve_json(const CurveTrace& t, bool trace) {
  Json out;
  out["u"] = to_json(t.u);
  out["v"] = to_json(t.v);
  out["m"] = to_json(t.m);
  out["quartic"] = to_json(t.quartic);
  out["weierstrass"] = to_json(t.curve);
  if (trace) {
    out["shift"] = to_json(t.map.shift());
    out["q"] = to_json(t.map.q());
    out["P"] = to_json(t.base_image);
  }
  out["mP"] = to_json(t.multiple);
  out["recovered"] = Json::array({to_json(t.recovered.u), to_json(t.recovered.v)});
  if (trace) {
    out["k"] = to_json(t.k);
    out["n"] = to_json(t.n);
    out["quadratic"] = Json{{"A", to_json(t.quadratic.a)}, {"B", to_json(t.quadratic.b)}, {"C", to_json(t.quadratic.c)}};
  }
  Json roots = Json::array();
  for (const auto& r : t.roots) roots.push_back(to_json(r));
  out["t_roots"] = roots;
  if (trace) out["t"] = to_json(t.t);
  out["quadruple"] = to_json(t.quadruple);
  return out;
}

void print_curve_text(std::ostream& out, const CurveTrace& t, bool trace) {
  const auto& c = t.quartic.coeffs;
  out << "quartic: V^2 = (" << c[0].str() << ")U^4 + (" << c[1].str() << ")U^3 + (" << c[2].str() << ")U^2 + ("
      << c[3].str() << ")U + (" << c[4].str() << ")\n";
  out << "base point: (" << t.quartic.base_u.str() << ", " << t.quartic.base_v.str() << ")\n";
  out << "weierstrass: a1=" << t.curve.a1.str() << " a2=" << t.curve.a2.str() << " a3=" << t.curve.a3.str()
      << " a4=" << t.curve.a4.str() << " a6=" << t.curve.a6.str() << "\n";
  auto pt = [](const CurvePoint& p) { return p.infinite ? std::string("O") : "(" + p.x.str() + ", " + p.y.str() + ")"; };
  if (trace) out << "P: " << pt(t.base_image) << "\n";
  out << "mP (m = " << t.m.str() << "): " << pt(t.multiple) << "\n";
  out << "recovered (U, V): (" << t.recovered.u.str() << ", " << t.recovered.v.str() << ")\n";
  if (trace) {
    out << "k/n: " << t.k.str() << "/" << t.n.str() << "\n";
    out << "quadratic: A=" << t.quadratic.a.str() << " B=" << t.quadratic.b.str() << " C=" << t.quadratic.c.str()
        << "\n";
  }
  out << "t roots:";
  for (const auto& r : t.roots) out << " " << r.str();
  out << "\n";
  if (trace) out << "t: " << t.t.str() << "\n";
  const auto& q = t.quadruple;
  out << "quadruple: " << q.p.str() << "^4 + " << q.q.str() << "^4 = " << q.r.str() << "^4 + " << q.w.str() << "^4\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equal sums of fourth powers: generators, curves, verification and search", "eqsum4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "eqsum4 1.0.0");

  const std::vector<std::string> formats{"json", "csv", "text"};

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a verified solution pair from one of the generators");
  generate->add_option("--family", gen.family, "n3, n4, n5, n6, vlift, appendix or lemma1")->required();
  generate->add_option("--u", gen.u, "rational u of the seed quadruple (default 2)");
  generate->add_option("--v", gen.v, "rational v (default 1; second u for n6, default 3)");
  generate->add_option("--m", gen.m, "free parameter m of the n = 4 family (default 1)");
  generate->add_option("--mult", gen.mult, "use the mult-th multiple of the curve point (default 1)");
  generate->add_option("--quad", gen.quads, "explicit seed quadruple p,q,r,w (twice for n6)");
  generate->add_option("--a", gen.a, "appendix parameter a (default 1)");
  generate->add_option("--b", gen.b, "appendix parameter b");
  generate->add_option("--q", gen.q, "appendix parameter q");
  generate->add_flag("--raw", gen.raw, "keep the unreduced values");
  generate->add_option("--format", gen.format)->check(CLI::IsMember(formats));

  std::string cu = "2", cv = "1", cm = "1", cformat = "json";
  bool ctrace = false;
  auto* curve = app.add_subcommand("curve", "Run the quartic to elliptic curve pipeline for one (u, v, m)");
  curve->add_option("--u", cu, "rational u (default 2)");
  curve->add_option("--v", cv, "rational v (default 1)");
  curve->add_option("--m", cm, "multiple of P, m >= 1 (default 1)");
  curve->add_flag("--trace", ctrace, "include every intermediate value");
  curve->add_option("--format", cformat)->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));

  std::string vinput, vformat = "json";
  auto* verify = app.add_subcommand("verify", "Verify solution pair JSON from a file or standard input");
  verify->add_option("input", vinput, "file with one object, an array, or JSON lines ('-' or omitted: stdin)");
  verify->add_option("--format", vformat)->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));

  std::string koutput, kformat = "json", kcorpus;
  bool kdump = false;
  unsigned kthreads = 1;
  auto* corpus = app.add_subcommand("corpus", "Classify every printed, construction and generic subject");
  corpus->add_option("--output", koutput, "write the report here instead of standard output");
  corpus->add_option("--format", kformat)->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));
  corpus->add_option("--corpus-file", kcorpus, "printed corpus to use instead of the built-in one");
  corpus->add_flag("--dump-corpus", kdump, "print the built-in corpus text and exit");
  corpus->add_option("--threads", kthreads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 256u));

  std::string smode = "equal-sums";
  std::uint32_t sbound = 0;
  bool sprimitive = true;
  std::optional<std::size_t> slimit;
  auto* search = app.add_subcommand("search", "Exhaustive search within a bound, streamed as JSON lines");
  search->add_option("--mode", smode, "equal-sums (EQUAL_SUMS_4) or n3-product (N3_PRODUCT)");
  search->add_option("--bound", sbound, "inclusive bound on the entries")->required()->check(
      CLI::Range(2u, kMaxSearchBound));
  search->add_flag("--primitive-only,!--all", sprimitive, "only primitive results (default)");
  search->add_option("--limit", slimit, "stop after this many results");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "eqsum4 1.0.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    err << (sub ? sub->help() : app.help());
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      SolutionPair sp = run_generate(gen);
      if (!verify_numeric(sp).claims_hold()) {
        err << "error: generated pair fails its claimed constraints\n";
        return kExitVerifyFailed;
      }
      print_pairs(out, {sp}, gen.format);
      return kExitOk;
    }
    if (curve->parsed()) {
      Integer m = integer_arg("m", cm);
      auto t = trace_point_to_quadruple(rational_arg("u", cu), rational_arg("v", cv), m);
      if (cformat == "json")
        out << curve_json(t, ctrace).dump(2) << "\n";
      else
        print_curve_text(out, t, ctrace);
      return kExitOk;
    }
    if (verify->parsed()) {
      std::string text = vinput.empty() || vinput == "-" ? read_all(in) : read_file(vinput);
      std::vector<VerificationReport> reps;
      std::size_t i = 0;
      for (const auto& doc : parse_json_documents(text)) {
        SolutionPair sp = solution_from_json(doc);
        if (sp.flags.empty()) sp.flags = {Constraint::Power4};
        std::string name = doc.contains("subject") && doc["subject"].is_string() ? doc["subject"].get<std::string>()
                                                                                 : "pair-" + std::to_string(++i);
        if (doc.contains("subject")) ++i;
        VerificationReport rep = verify_numeric(sp, name);
        for (const char* key : {"trivial", "primitive"}) {
          if (!doc.contains(key)) continue;
          bool want = (std::string(key) == "trivial") ? rep.trivial : rep.primitive;
          if (!doc[key].is_boolean() || doc[key].get<bool>() != want)
            rep.notes.push_back(std::string("input says ") + key + " = " + doc[key].dump() + ", recomputed " +
                                (want ? "true" : "false"));
        }
        reps.push_back(std::move(rep));
      }
      bool ok = std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.claims_hold(); });
      if (vformat == "json")
        out << verify_report(reps).dump(2) << "\n";
      else
        print_reports_text(out, reps);
      return ok ? kExitOk : kExitVerifyFailed;
    }
    if (corpus->parsed()) {
      if (kdump) {
        out << default_corpus_text();
        return kExitOk;
      }
      std::vector<SymbolicFamily> printed = kcorpus.empty() ? corpus_families() : parse_corpus(read_file(kcorpus));
      auto reps = classify_corpus(printed, kthreads);
      std::ostringstream body;
      if (kformat == "json")
        body << corpus_report(reps).dump(2) << "\n";
      else
        print_reports_text(body, reps);
      if (koutput.empty()) {
        out << body.str();
      } else {
        std::ofstream f(koutput, std::ios::binary);
        if (!f) throw UsageError("cannot write " + koutput);
        f << body.str();
      }
      return required_hold(reps) ? kExitOk : kExitVerifyFailed;
    }
    if (search->parsed()) {
      auto mode = search_mode_from_string(smode);
      if (!mode) throw UsageError("--mode must be equal-sums or n3-product");
      SearchConfig cfg;
      cfg.mode = *mode;
      cfg.bound = sbound;
      cfg.primitive_only = sprimitive;
      cfg.limit = slimit;
      bool ok = true;
      if (cfg.mode == SearchMode::EqualSums4) {
        for (const auto& q : equal_sums_search(cfg)) {
          SolutionPair sp{{q.p, q.q}, {q.r, q.w}, {Constraint::Power4}};
          ok = ok && confirm(sp);
          Json j;
          j["quadruple"] = to_json(q);
          j["sum"] = (q.p.pow(4) + q.q.pow(4)).str();
          out << j.dump() << "\n";
        }
      } else {
        n3_product_search(cfg, [&](const SolutionPair& sp) {
          ok = ok && confirm(sp);
          out << to_json(sp).dump() << "\n";
          out.flush();
          return true;
        });
      }
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const JsonError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eqsum4
