#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqsum4/corpus.hpp"
#include "eqsum4/mpoly.hpp"
#include "eqsum4/solution.hpp"

namespace eqsum4 {

enum class Status { Holds, Fails, NotClaimed };

std::string_view to_string(Status s);

struct ConstraintCheck {
  Constraint constraint = Constraint::Power4;
  Status status = Status::NotClaimed;
  /// Symbolic subjects: the nonzero residual of a failing constraint.
  std::optional<MPoly> residual;
  /// Numeric subjects: the common value when the constraint holds.
  std::optional<Integer> value;
  /// Numeric subjects: both sides of a failing constraint.
  std::optional<std::pair<Integer, Integer>> witness;
};

/// Numeric statuses of a symbolic subject at one parameter point.
struct Specialization {
  std::vector<Rational> at;
  std::vector<Status> statuses;  // aligned with the claimed constraints
  bool trivial = false;
};

struct VerificationReport {
  std::string subject;
  bool symbolic = false;
  std::optional<Source> source;
  std::size_t n = 0;
  std::vector<std::string> params;
  std::vector<ConstraintCheck> checks;  // POWER4, PRODUCT, LINSUM
  bool trivial = false;
  bool primitive = false;
  bool degenerate = false;
  std::vector<Specialization> specializations;
  std::vector<std::string> notes;

  Status status(Constraint c) const;
  const ConstraintCheck& check(Constraint c) const;
  /// Every claimed constraint holds.
  bool claims_hold() const;
  /// Construction and generic subjects, and numeric pairs, must hold;
  /// printed families are only recorded.
  bool required() const { return source != Source::Printed; }
};

VerificationReport verify_numeric(const SolutionPair& sp, std::string subject = "");

/// Expands the residual of one constraint for a family.
VerificationReport verify_symbolic(const SymbolicFamily& fam, Constraint c);
/// Looks the family up among the built-in subjects with the given source.
VerificationReport verify_symbolic(FamilyId family, Constraint c, Source source = Source::Printed);

struct VerifyOptions {
  /// Each parameter i is specialized at s + i for s in [first, last].
  long first = 2, last = 12;
  bool sign_diagnostics = true;
};

/// Every claimed constraint symbolically, triviality, primitivity,
/// degeneracy and numeric specializations.
VerificationReport verify_family(const SymbolicFamily& fam, const VerifyOptions& opt = {});

/// Reports on every subject in all_subjects(printed), sorted by subject id,
/// with notes comparing each printed family against its construction.
std::vector<VerificationReport> classify_corpus(const std::vector<SymbolicFamily>& printed = corpus_families(),
                                                unsigned threads = 1, const VerifyOptions& opt = {});

/// True when every required report holds all its claims.
bool required_hold(const std::vector<VerificationReport>& reports);

/// Entrywise comparison of a printed family with a construction: empty
/// when each printed entry equals the construction entry up to sign and one
/// common factor, else the names of the entries that do not.
std::vector<std::string> entry_mismatches(const SymbolicFamily& printed, const SymbolicFamily& construction);

/// First sign pattern (x then y, first x fixed to +) making the LINSUM
/// residual vanish, as e.g. "x(+,-,+) y(-,+,+)"; nullopt if none does.
std::optional<std::string> linear_sign_pattern(const std::vector<MPoly>& xs, const std::vector<MPoly>& ys);

}  // namespace eqsum4
