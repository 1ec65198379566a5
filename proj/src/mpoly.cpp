#include "eqsum4/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace eqsum4 {

namespace {

using Exponents = MPoly::Exponents;

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// Descending graded-lexicographic order.
bool grlex_before(const Exponents& a, const Exponents& b) {
  unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : e) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.size() > MPoly::kMaxVariables)
    throw std::length_error("polynomial exceeds " + std::to_string(MPoly::kMaxVariables) +
                            " variables");
  return out;
}

std::vector<MPoly::Term> collect(std::unordered_map<Exponents, Integer, ExponentsHash>& acc) {
  std::vector<MPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) terms.push_back({e, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const MPoly::Term& a, const MPoly::Term& b) { return grlex_before(a.exps, b.exps); });
  return terms;
}

}  // namespace

MPoly::MPoly(const Integer& c) {
  if (!c.is_zero()) terms_.push_back({Exponents{}, c});
}

MPoly MPoly::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  Term t{Exponents{}, Integer(1)};
  t.exps[0] = 1;
  return MPoly({std::move(name)}, {std::move(t)});
}

Integer MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + str());
  return terms_.empty() ? Integer(0) : terms_.front().coeff;
}

int MPoly::var_index(std::string_view var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return -1;
  return static_cast<int>(it - vars_.begin());
}

unsigned MPoly::degree(std::string_view var) const {
  int i = var_index(var);
  if (i < 0) return 0;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exps[i]);
  return d;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : total(terms_.front().exps); }

MPoly MPoly::coefficient(std::string_view var, unsigned k) const {
  int i = var_index(var);
  if (i < 0) return k == 0 ? *this : MPoly();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[i] != k) continue;
    Term c = t;
    c.exps[i] = 0;
    out.push_back(std::move(c));
  }
  // Every kept term has exps[i] == k, so clearing it preserves their order.
  MPoly r(vars_, std::move(out));
  r.drop_unused_variables();
  return r;
}

Integer MPoly::content() const {
  Integer g(0);
  for (const auto& t : terms_) g = gcd(g, t.coeff);
  return g;
}

std::vector<MPoly::Term> MPoly::exponents_over(const std::vector<std::string>& target) const {
  if (target == vars_) return terms_;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    map[i] = std::lower_bound(target.begin(), target.end(), vars_[i]) - target.begin();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n{Exponents{}, t.coeff};
    for (std::size_t i = 0; i < vars_.size(); ++i) n.exps[map[i]] = t.exps[i];
    out.push_back(std::move(n));
  }
  return out;
}

void MPoly::drop_unused_variables() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.exps[i]) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vars;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) {
      vars.push_back(vars_[i]);
      keep.push_back(i);
    }
  for (auto& t : terms_) {
    Exponents e{};
    for (std::size_t j = 0; j < keep.size(); ++j) e[j] = t.exps[keep[j]];
    t.exps = e;
  }
  vars_ = std::move(vars);
}

MPoly MPoly::add_signed(const MPoly& o, bool subtract) const {
  auto vars = merge_vars(vars_, o.vars_);
  auto a = exponents_over(vars);
  auto b = o.exponents_over(vars);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_before(a[i].exps, b[j].exps))) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || grlex_before(b[j].exps, a[i].exps)) {
      Term t = std::move(b[j++]);
      if (subtract) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      Term t = std::move(a[i++]);
      if (subtract)
        t.coeff -= b[j].coeff;
      else
        t.coeff += b[j].coeff;
      ++j;
      if (!t.coeff.is_zero()) out.push_back(std::move(t));
    }
  }
  MPoly r(std::move(vars), std::move(out));
  r.drop_unused_variables();
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) { return *this = add_signed(o, false); }
MPoly& MPoly::operator-=(const MPoly& o) { return *this = add_signed(o, true); }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  auto vars = merge_vars(a.vars_, b.vars_);
  auto ta = a.exponents_over(vars);
  auto tb = b.exponents_over(vars);
  std::unordered_map<Exponents, Integer, ExponentsHash> acc;
  acc.reserve(ta.size() * tb.size() / 2 + 1);
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      Exponents e;
      for (std::size_t i = 0; i < MPoly::kMaxVariables; ++i) {
        unsigned s = unsigned(x.exps[i]) + y.exps[i];
        if (s > 0xFFFF) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<std::uint16_t>(s);
      }
      acc[e].addmul(x.coeff, y.coeff);
    }
  }
  MPoly r(std::move(vars), collect(acc));
  r.drop_unused_variables();
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::divexact(const Integer& d) const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff.divexact(d);
  return r;
}

std::optional<MPoly> MPoly::divide(const MPoly& g) const {
  if (g.is_zero()) throw DivisionByZero();
  auto vars = merge_vars(vars_, g.vars_);
  auto order = [](const Exponents& a, const Exponents& b) { return grlex_before(a, b); };
  std::map<Exponents, Integer, decltype(order)> rem(order);
  for (auto& t : exponents_over(vars)) rem.emplace(t.exps, std::move(t.coeff));
  auto divisor = g.exponents_over(vars);
  const Term& lead = divisor.front();
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto top = rem.begin();
    Term qt;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (top->first[i] < lead.exps[i]) return std::nullopt;
      qt.exps[i] = static_cast<std::uint16_t>(top->first[i] - lead.exps[i]);
    }
    if (!(top->second % lead.coeff).is_zero()) return std::nullopt;
    qt.coeff = top->second / lead.coeff;
    for (const auto& t : divisor) {
      Exponents e;
      for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = static_cast<std::uint16_t>(qt.exps[i] + t.exps[i]);
      auto it = rem.try_emplace(e, Integer(0)).first;
      it->second -= qt.coeff * t.coeff;
      if (it->second.is_zero()) rem.erase(it);
    }
    quot.push_back(std::move(qt));
  }
  MPoly r(std::move(vars), std::move(quot));
  r.drop_unused_variables();
  return r;
}

Rational MPoly::eval(const Assignment& values) const {
  // Clear denominators per variable so the sum runs over integers.
  std::vector<unsigned> degs(vars_.size(), 0);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < vars_.size(); ++i) degs[i] = std::max<unsigned>(degs[i], t.exps[i]);
  std::vector<std::vector<Integer>> num_pow(vars_.size()), den_pow(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) throw MissingVariable(vars_[i]);
    num_pow[i].resize(degs[i] + 1);
    den_pow[i].resize(degs[i] + 1);
    num_pow[i][0] = Integer(1);
    den_pow[i][0] = Integer(1);
    for (unsigned k = 1; k <= degs[i]; ++k) {
      num_pow[i][k] = num_pow[i][k - 1] * it->second.num();
      den_pow[i][k] = den_pow[i][k - 1] * it->second.den();
    }
  }
  Integer sum(0);
  for (const auto& t : terms_) {
    Integer v = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = t.exps[i];
      if (e) v *= num_pow[i][e];
      if (degs[i] - e) v *= den_pow[i][degs[i] - e];
    }
    sum += v;
  }
  Integer den(1);
  for (std::size_t i = 0; i < vars_.size(); ++i) den *= den_pow[i][degs[i]];
  return Rational(std::move(sum), std::move(den));
}

MPoly MPoly::substitute(const std::map<std::string, MPoly, std::less<>>& values) const {
  std::vector<const MPoly*> repl(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) repl[i] = &it->second;
  }
  std::vector<std::vector<MPoly>> powers(vars_.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly(1));
    while (cache.size() <= e) {
      const MPoly& base = repl[i] ? *repl[i] : MPoly::variable(vars_[i]);
      cache.push_back(cache.back() * base);
    }
    return cache[e];
  };
  MPoly result;
  for (const auto& t : terms_) {
    MPoly term(t.coeff);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (t.exps[i]) term *= power_of(i, t.exps[i]);
    result += term;
  }
  return result;
}

MPoly MPoly::substitute(std::string_view var, const MPoly& value) const {
  std::map<std::string, MPoly, std::less<>> m;
  m.emplace(std::string(var), value);
  return substitute(m);
}

MPoly MPoly::substitute_fraction(std::string_view var, const MPoly& num, const MPoly& den,
                                 unsigned scale) const {
  unsigned d = degree(var);
  if (scale < d)
    throw std::invalid_argument("scale degree " + std::to_string(scale) + " below degree " +
                                std::to_string(d) + " of " + std::string(var));
  MPoly result;
  MPoly num_pow(1);
  std::vector<MPoly> den_pows{MPoly(1)};
  for (unsigned k = 1; k <= scale; ++k) den_pows.push_back(den_pows.back() * den);
  for (unsigned k = 0; k <= d; ++k) {
    MPoly c = coefficient(var, k);
    if (!c.is_zero()) result += c * num_pow * den_pows[scale - k];
    num_pow *= num;
  }
  return result;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool has_vars = total(t.exps) > 0;
    Integer mag = t.coeff.abs();
    if (t.coeff.sign() < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    bool wrote = false;
    if (!has_vars || mag != Integer(1)) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!t.exps[i]) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (t.exps[i] > 1) os << '^' << t.exps[i];
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

}  // namespace eqsum4
