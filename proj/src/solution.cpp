#include "eqsum4/solution.hpp"

#include <algorithm>

namespace eqsum4 {

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::Power4:
      return "POWER4";
    case Constraint::Product:
      return "PRODUCT";
    case Constraint::LinSum:
      return "LINSUM";
  }
  return "?";
}

std::optional<Constraint> constraint_from_string(std::string_view name) {
  for (auto c : kAllConstraints)
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::vector<Constraint> Constraints::list() const {
  std::vector<Constraint> out;
  for (auto c : kAllConstraints)
    if (has(c)) out.push_back(c);
  return out;
}

bool SolutionPair::is_trivial() const {
  if (xs.size() != ys.size()) return false;
  std::vector<Integer> a, b;
  for (const auto& x : xs) a.push_back(x.abs());
  for (const auto& y : ys) b.push_back(y.abs());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool SolutionPair::is_primitive() const {
  Integer g(0);
  for (const auto& x : xs) g = gcd(g, x);
  for (const auto& y : ys) g = gcd(g, y);
  return g == Integer(1);
}

bool SolutionPair::is_degenerate() const {
  auto zero = [](const Integer& v) { return v.is_zero(); };
  return std::any_of(xs.begin(), xs.end(), zero) || std::any_of(ys.begin(), ys.end(), zero);
}

SolutionPair reduce_primitive(SolutionPair sp) {
  Integer g(0);
  for (const auto& x : sp.xs) g = gcd(g, x);
  for (const auto& y : sp.ys) g = gcd(g, y);
  if (g.is_zero() || g == Integer(1)) return sp;
  for (auto& x : sp.xs) x = x.divexact(g);
  for (auto& y : sp.ys) y = y.divexact(g);
  return sp;
}

}  // namespace eqsum4
