#include "eqsum4/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace eqsum4 {

namespace {

template <class T>
std::pair<T, T> sides(Constraint c, const std::vector<T>& xs, const std::vector<T>& ys) {
  switch (c) {
    case Constraint::Power4: {
      T a(0), b(0);
      for (const auto& x : xs) a += x.pow(4);
      for (const auto& y : ys) b += y.pow(4);
      return {a, b};
    }
    case Constraint::Product: {
      T a(1), b(1);
      for (const auto& x : xs) a *= x;
      for (const auto& y : ys) b *= y;
      return {a, b};
    }
    case Constraint::LinSum: {
      T a(0), b(0);
      for (const auto& x : xs) a += x;
      for (const auto& y : ys) b += y;
      return {a, b};
    }
  }
  throw std::logic_error("unknown constraint");
}

std::vector<ConstraintCheck> blank_checks() {
  std::vector<ConstraintCheck> out;
  for (auto c : kAllConstraints) out.push_back({c, Status::NotClaimed, std::nullopt, std::nullopt, std::nullopt});
  return out;
}

ConstraintCheck& slot(std::vector<ConstraintCheck>& checks, Constraint c) {
  for (auto& k : checks)
    if (k.constraint == c) return k;
  throw std::logic_error("missing constraint slot");
}

ConstraintCheck symbolic_check(const SymbolicFamily& fam, Constraint c) {
  auto [a, b] = sides(c, fam.xs, fam.ys);
  MPoly res = a - b;
  ConstraintCheck k{c, res.is_zero() ? Status::Holds : Status::Fails, std::nullopt, std::nullopt, std::nullopt};
  if (!res.is_zero()) k.residual = std::move(res);
  return k;
}

Integer polynomial_content(const SymbolicFamily& fam) {
  Integer g(0);
  for (const auto& x : fam.xs) g = gcd(g, x.content());
  for (const auto& y : fam.ys) g = gcd(g, y.content());
  return g;
}

std::string entry_name(char side, std::size_t i) { return std::string(1, side) + std::to_string(i + 1); }

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Fails:
      return "fails";
    case Status::NotClaimed:
      return "not-claimed";
  }
  return "?";
}

Status VerificationReport::status(Constraint c) const { return check(c).status; }

const ConstraintCheck& VerificationReport::check(Constraint c) const {
  for (const auto& k : checks)
    if (k.constraint == c) return k;
  throw std::logic_error("report has no slot for " + std::string(to_string(c)));
}

bool VerificationReport::claims_hold() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& k) { return k.status == Status::Fails; });
}

VerificationReport verify_numeric(const SolutionPair& sp, std::string subject) {
  VerificationReport rep;
  rep.subject = std::move(subject);
  rep.n = sp.n();
  rep.checks = blank_checks();
  rep.trivial = sp.is_trivial();
  rep.primitive = sp.is_primitive();
  rep.degenerate = sp.is_degenerate();
  if (sp.xs.size() != sp.ys.size()) rep.notes.push_back("sides have different lengths");
  for (auto c : sp.flags.list()) {
    auto [a, b] = sides(c, sp.xs, sp.ys);
    auto& k = slot(rep.checks, c);
    if (a == b) {
      k.status = Status::Holds;
      k.value = std::move(a);
    } else {
      k.status = Status::Fails;
      k.witness = std::pair{std::move(a), std::move(b)};
    }
  }
  return rep;
}

VerificationReport verify_symbolic(const SymbolicFamily& fam, Constraint c) {
  VerificationReport rep;
  rep.subject = fam.id;
  rep.symbolic = true;
  rep.source = fam.source;
  rep.n = fam.n();
  rep.params = fam.params;
  rep.checks = blank_checks();
  slot(rep.checks, c) = symbolic_check(fam, c);
  rep.trivial = trivial_up_to_sign(fam.xs, fam.ys);
  rep.primitive = polynomial_content(fam) == Integer(1);
  auto zero = [](const MPoly& p) { return p.is_zero(); };
  rep.degenerate = std::any_of(fam.xs.begin(), fam.xs.end(), zero) || std::any_of(fam.ys.begin(), fam.ys.end(), zero);
  return rep;
}

VerificationReport verify_symbolic(FamilyId family, Constraint c, Source source) {
  for (const auto& f : all_subjects())
    if (f.family == family && f.source == source) return verify_symbolic(f, c);
  throw std::invalid_argument("no " + std::string(to_string(source)) + " subject for " +
                              std::string(to_string(family)));
}

std::optional<std::string> linear_sign_pattern(const std::vector<MPoly>& xs, const std::vector<MPoly>& ys) {
  std::vector<MPoly> all = xs;
  for (const auto& y : ys) all.push_back(-y);
  if (all.empty()) return std::nullopt;
  const std::size_t free_bits = all.size() - 1;
  if (free_bits > 20) throw std::invalid_argument("too many entries for a sign search");
  for (unsigned long mask = 0; mask < (1UL << free_bits); ++mask) {
    MPoly acc = all[0];
    for (std::size_t i = 1; i < all.size(); ++i) {
      if (mask >> (i - 1) & 1UL)
        acc -= all[i];
      else
        acc += all[i];
    }
    if (!acc.is_zero()) continue;
    auto sign = [&](std::size_t i) { return i == 0 || !(mask >> (i - 1) & 1UL) ? '+' : '-'; };
    std::string out = "x(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += std::string(i ? "," : "") + sign(i);
    out += ") y(";
    for (std::size_t j = 0; j < ys.size(); ++j) out += std::string(j ? "," : "") + sign(xs.size() + j);
    return out + ")";
  }
  return std::nullopt;
}

VerificationReport verify_family(const SymbolicFamily& fam, const VerifyOptions& opt) {
  if (fam.is_numeric()) {
    VerificationReport rep = verify_numeric(fam.specialize({}), fam.id);
    rep.source = fam.source;
    return rep;
  }
  VerificationReport rep;
  rep.subject = fam.id;
  rep.symbolic = true;
  rep.source = fam.source;
  rep.n = fam.n();
  rep.params = fam.params;
  rep.checks = blank_checks();
  for (auto c : fam.claims.list()) slot(rep.checks, c) = symbolic_check(fam, c);
  rep.trivial = trivial_up_to_sign(fam.xs, fam.ys);
  rep.primitive = polynomial_content(fam) == Integer(1);
  auto zero = [](const MPoly& p) { return p.is_zero(); };
  rep.degenerate = std::any_of(fam.xs.begin(), fam.xs.end(), zero) || std::any_of(fam.ys.begin(), fam.ys.end(), zero);

  const auto claimed = fam.claims.list();
  std::vector<int> holds(claimed.size(), 0);
  int total = 0;
  for (long s = opt.first; s <= opt.last; ++s) {
    Specialization sp;
    for (std::size_t i = 0; i < fam.params.size(); ++i) sp.at.emplace_back(Integer(s + static_cast<long>(i)));
    VerificationReport num = verify_numeric(fam.specialize(sp.at));
    sp.trivial = num.trivial;
    for (std::size_t i = 0; i < claimed.size(); ++i) {
      Status st = num.status(claimed[i]);
      sp.statuses.push_back(st);
      if (st == Status::Holds) ++holds[i];
      if (st == Status::Fails && rep.status(claimed[i]) == Status::Holds)
        throw std::logic_error(fam.id + ": identity fails at a specialization");
    }
    rep.specializations.push_back(std::move(sp));
    ++total;
  }
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    if (rep.status(claimed[i]) == Status::Holds) continue;
    rep.notes.push_back(std::string(to_string(claimed[i])) + " holds at " + std::to_string(holds[i]) + " of " +
                        std::to_string(total) + " specializations");
    if (holds[i] == total && total > 0)
      rep.notes.push_back(std::string(to_string(claimed[i])) + " holds at every sampled point but not identically");
  }
  if (opt.sign_diagnostics && rep.status(Constraint::LinSum) == Status::Fails) {
    if (auto pat = linear_sign_pattern(fam.xs, fam.ys))
      rep.notes.push_back("LINSUM holds identically with signs " + *pat);
    else
      rep.notes.push_back("LINSUM fails under every sign pattern");
  }
  return rep;
}

std::vector<std::string> entry_mismatches(const SymbolicFamily& printed, const SymbolicFamily& construction) {
  if (printed.n() != construction.n()) return {"n"};
  std::vector<const MPoly*> pe, ce;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < printed.n(); ++i) {
    pe.push_back(&printed.xs[i]);
    ce.push_back(&construction.xs[i]);
    names.push_back(entry_name('x', i));
  }
  for (std::size_t i = 0; i < printed.n(); ++i) {
    pe.push_back(&printed.ys[i]);
    ce.push_back(&construction.ys[i]);
    names.push_back(entry_name('y', i));
  }
  // Reference ratio: the first entry pair with both sides nonzero.
  std::size_t ref = pe.size();
  for (std::size_t i = 0; i < pe.size() && ref == pe.size(); ++i)
    if (!pe[i]->is_zero() && !ce[i]->is_zero()) ref = i;
  if (ref == pe.size()) return {"all"};
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < pe.size(); ++i) {
    if (i == ref) continue;
    MPoly lhs = *pe[i] * *ce[ref];
    MPoly rhs = *pe[ref] * *ce[i];
    if (lhs != rhs && lhs != -rhs) bad.push_back(names[i]);
  }
  // A single differing reference entry shows up as every other entry failing.
  if (bad.size() == pe.size() - 1) return {names[ref]};
  return bad;
}

std::vector<VerificationReport> classify_corpus(const std::vector<SymbolicFamily>& printed, unsigned threads,
                                                const VerifyOptions& opt) {
  const std::vector<SymbolicFamily> subjects = all_subjects(printed);
  std::vector<VerificationReport> reports(subjects.size());
  auto job = [&](std::size_t i) {
    const auto& fam = subjects[i];
    VerificationReport rep = verify_family(fam, opt);
    if (fam.source == Source::Printed && !fam.is_numeric()) {
      for (const auto& c : construction_families()) {
        if (c.family != fam.family || c.params != fam.params) continue;
        auto bad = entry_mismatches(fam, c);
        if (bad.empty()) {
          rep.notes.push_back("entries match " + c.id + " up to sign and a common factor");
        } else {
          std::string list;
          for (const auto& b : bad) list += (list.empty() ? "" : ", ") + b;
          rep.notes.push_back("entries " + list + " differ from " + c.id);
        }
      }
    }
    reports[i] = std::move(rep);
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < subjects.size(); ++i) job(i);
  } else {
    construction_families();
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < subjects.size();) {
          try {
            job(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  return reports;
}

bool required_hold(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const auto& r) { return !r.required() || r.claims_hold(); });
}

}  // namespace eqsum4
