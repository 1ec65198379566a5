#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsum4/corpus.hpp"
#include "eqsum4/quartic_elliptic.hpp"
#include "eqsum4/search.hpp"
#include "eqsum4/solution.hpp"
#include "eqsum4/verifier.hpp"

namespace eqsum4 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "eqsum4.report/1";

/// Malformed or out-of-schema JSON input.
class JsonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every number is a decimal string. Readers also take JSON integers that
// fit in 64 bits, never floating point.

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// ["p","q","r","w"]
Json to_json(const Quadruple& q);
Quadruple quadruple_from_json(const Json& j);

/// {"n", "x", "y", "flags", "trivial", "primitive"}; trivial and primitive are
/// recomputed on read and only checked if present.
Json to_json(const SolutionPair& sp);
SolutionPair solution_from_json(const Json& j);

/// "infinity" or {"x": "...", "y": "..."}
Json to_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j);
Json to_json(const WeierstrassModel& c);
WeierstrassModel weierstrass_from_json(const Json& j);
/// {"a4", "a3", "a2", "a1", "a0", "point": ["U0", "V0"]}
Json to_json(const QuarticModel& q);
QuarticModel quartic_from_json(const Json& j);

Json to_json(const CurveTrace& t);
Json to_json(const SymbolicFamily& f);
Json to_json(const VerificationReport& r);

/// {"schema", "subjects": [...], "required_hold"}
Json corpus_report(const std::vector<VerificationReport>& reports);
/// {"schema", "results": [...], "all_hold"}
Json verify_report(const std::vector<VerificationReport>& reports);

/// One object, an array of objects, or one object per line.
std::vector<Json> parse_json_documents(const std::string& text);

}  // namespace eqsum4
