#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqsum4/integer.hpp"
#include "eqsum4/rational.hpp"

namespace eqsum4 {

/// Raised by evaluation when the assignment lacks one of the polynomial's variables.
class MissingVariable : public std::invalid_argument {
 public:
  explicit MissingVariable(const std::string& name)
      : std::invalid_argument("no value for variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Sparse multivariate polynomial with Integer coefficients.
///
/// Variables are kept sorted by name and exponent vectors are dense over that
/// list. Terms are stored in descending graded-lexicographic order with no
/// zero coefficients, and variables that no term uses are dropped, so two
/// polynomials are equal exactly when their term lists are.
class MPoly {
 public:
  static constexpr std::size_t kMaxVariables = 12;
  using Exponents = std::array<std::uint16_t, kMaxVariables>;

  struct Term {
    Exponents exps{};
    Integer coeff;
  };

  MPoly() = default;
  MPoly(int c) : MPoly(Integer(c)) {}
  MPoly(long c) : MPoly(Integer(c)) {}
  MPoly(const Integer& c);

  static MPoly variable(std::string name);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Constant term value; throws std::logic_error on a non-constant polynomial.
  Integer constant_value() const;

  unsigned degree(std::string_view var) const;
  unsigned total_degree() const;
  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MPoly coefficient(std::string_view var, unsigned k) const;
  /// Gcd of all coefficients (non-negative; 0 for the zero polynomial).
  Integer content() const;

  Rational eval(const Assignment& values) const;
  /// Simultaneous substitution; variables absent from `values` stay symbolic.
  MPoly substitute(const std::map<std::string, MPoly, std::less<>>& values) const;
  MPoly substitute(std::string_view var, const MPoly& value) const;
  /// den^scale * f(var = num/den) as a polynomial. Requires scale >= degree(var).
  MPoly substitute_fraction(std::string_view var, const MPoly& num, const MPoly& den,
                            unsigned scale) const;

  MPoly pow(unsigned e) const;
  /// Divides every coefficient by d; d must divide the content.
  MPoly divexact(const Integer& d) const;
  /// Exact quotient f / g over the integers, or nullopt if g does not divide f.
  std::optional<MPoly> divide(const MPoly& g) const;

  /// Printed as in "u^6+3*u^5-2*u^4+u^2+1".
  std::string str() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  MPoly(std::vector<std::string> vars, std::vector<Term> terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}
  /// Re-expresses exponents over `target`, which must contain every variable.
  std::vector<Term> exponents_over(const std::vector<std::string>& target) const;
  void drop_unused_variables();
  MPoly add_signed(const MPoly& o, bool subtract) const;
  int var_index(std::string_view var) const;

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace eqsum4
