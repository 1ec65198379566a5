#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqsum4/integer.hpp"

namespace eqsum4 {

enum class Constraint : unsigned {
  Power4 = 1,   // sum x^4 = sum y^4
  Product = 2,  // prod x = prod y
  LinSum = 4,   // sum x = sum y
};

inline constexpr std::array<Constraint, 3> kAllConstraints = {Constraint::Power4, Constraint::Product,
                                                              Constraint::LinSum};

std::string_view to_string(Constraint c);
std::optional<Constraint> constraint_from_string(std::string_view name);

/// Small bit set of constraints.
class Constraints {
 public:
  constexpr Constraints() = default;
  constexpr Constraints(std::initializer_list<Constraint> cs) {
    for (auto c : cs) bits_ |= static_cast<unsigned>(c);
  }
  constexpr bool has(Constraint c) const { return bits_ & static_cast<unsigned>(c); }
  constexpr void set(Constraint c) { bits_ |= static_cast<unsigned>(c); }
  constexpr bool empty() const { return bits_ == 0; }
  std::vector<Constraint> list() const;
  friend constexpr bool operator==(Constraints, Constraints) = default;

 private:
  unsigned bits_ = 0;
};

/// sum x^k - sum y^k for any ring with pow().
template <class T>
T power_sum_residual(const std::vector<T>& xs, const std::vector<T>& ys, unsigned k) {
  T acc(0);
  for (const auto& x : xs) acc += x.pow(k);
  for (const auto& y : ys) acc -= y.pow(k);
  return acc;
}

template <class T>
T product_residual(const std::vector<T>& xs, const std::vector<T>& ys) {
  T px(1), py(1);
  for (const auto& x : xs) px *= x;
  for (const auto& y : ys) py *= y;
  return px - py;
}

template <class T>
T linear_residual(const std::vector<T>& xs, const std::vector<T>& ys) {
  T acc(0);
  for (const auto& x : xs) acc += x;
  for (const auto& y : ys) acc -= y;
  return acc;
}

template <class T>
T constraint_residual(Constraint c, const std::vector<T>& xs, const std::vector<T>& ys) {
  switch (c) {
    case Constraint::Power4:
      return power_sum_residual(xs, ys, 4);
    case Constraint::Product:
      return product_residual(xs, ys);
    case Constraint::LinSum:
      return linear_residual(xs, ys);
  }
  return T(0);
}

/// x-side and y-side of equal length n with the constraints it claims.
struct SolutionPair {
  std::vector<Integer> xs, ys;
  Constraints flags;

  std::size_t n() const { return xs.size(); }
  /// multiset{|x|} == multiset{|y|}
  bool is_trivial() const;
  /// gcd of all 2n entries is 1.
  bool is_primitive() const;
  /// Some entry is zero.
  bool is_degenerate() const;
  bool holds(Constraint c) const { return constraint_residual(c, xs, ys).is_zero(); }

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

/// Divides all 2n entries by their common gcd. Every constraint is homogeneous,
/// so a single common factor preserves all of them.
SolutionPair reduce_primitive(SolutionPair sp);

}  // namespace eqsum4
