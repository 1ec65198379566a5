#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqsum4/families.hpp"
#include "eqsum4/mpoly.hpp"
#include "eqsum4/solution.hpp"

namespace eqsum4 {

/// Printed: transcribed family, checked but never trusted.
/// Construction: rebuilt here from a generator, must hold.
/// Generic: a generator's identity with every role left symbolic, must hold.
enum class Source { Printed, Construction, Generic };

std::string_view to_string(Source s);

/// An x-side / y-side pair of polynomial lists with the constraints it claims.
/// Numeric entries are constant polynomials with no parameters.
struct SymbolicFamily {
  std::string id;  // e.g. "N4_T3/printed"
  FamilyId family = FamilyId::LEMMA1_EX;
  Source source = Source::Printed;
  Constraints claims;
  std::vector<std::string> params;
  std::vector<MPoly> xs, ys;

  std::size_t n() const { return xs.size(); }
  bool is_numeric() const { return params.empty(); }
  /// Entries at params[i] = values[i].
  SolutionPair specialize(const std::vector<Rational>& values) const;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& what, std::size_t line)
      : std::runtime_error("corpus line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Each x entry equals a distinct y entry up to sign.
bool trivial_up_to_sign(const std::vector<MPoly>& xs, const std::vector<MPoly>& ys);

/// The built-in printed corpus text.
std::string_view default_corpus_text();

/// Parses the corpus format (see data/corpus.txt). Throws CorpusError.
std::vector<SymbolicFamily> parse_corpus(std::string_view text);

/// The built-in printed families.
const std::vector<SymbolicFamily>& corpus_families();
/// Generator outputs over the closed-form quadruples and the linear-sum method.
const std::vector<SymbolicFamily>& construction_families();
/// Generator identities that hold without any relation among the roles.
const std::vector<SymbolicFamily>& generic_identities();

/// Printed, construction and generic subjects together, sorted by id.
std::vector<SymbolicFamily> all_subjects(const std::vector<SymbolicFamily>& printed = corpus_families());

/// The closed-form quadruple rebuilt from (k, n, t) = (u^3-1, u^3+1, 3u^2/(u^6-2u^4-2u^2+1)).
const std::array<MPoly, 4>& derived_quadruple_polys();

}  // namespace eqsum4
