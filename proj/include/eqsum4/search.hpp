#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "eqsum4/quartic_elliptic.hpp"
#include "eqsum4/solution.hpp"

namespace eqsum4 {

enum class SearchMode { EqualSums4, N3Product };

std::string_view to_string(SearchMode m);
std::optional<SearchMode> search_mode_from_string(std::string_view s);

struct SearchConfig {
  std::uint32_t bound = 2;  // inclusive, 2 <= bound <= kMaxSearchBound
  SearchMode mode = SearchMode::EqualSums4;
  bool primitive_only = true;
  /// Stop after this many results.
  std::optional<std::size_t> limit;
};

inline constexpr std::uint32_t kMaxSearchBound = 1u << 20;

/// All nontrivial quadruples p^4+q^4 = r^4+w^4 with 1 <= p <= q, r <= w, all
/// entries <= bound and (p,q) < (r,w), sorted lexicographically.
/// Sums p^4+q^4 are enumerated in increasing order with a heap, so colliding
/// pairs arrive together and memory stays O(bound).
std::vector<Quadruple> equal_sums_search(const SearchConfig& cfg);

/// Streams every nontrivial n = 3 pair with entries in [1, bound], equal
/// fourth-power sums and equal products, in increasing order of the common
/// power sum (ties lexicographic). Each side is ascending and the
/// lexicographically smaller side is x. The sink returns false to stop.
void n3_product_search(const SearchConfig& cfg, const std::function<bool(const SolutionPair&)>& sink);
std::vector<SolutionPair> n3_product_search(const SearchConfig& cfg);

/// Re-checks the claimed constraints (POWER4 and PRODUCT if none are
/// claimed) with its own decimal big-number code, sharing nothing with the
/// verifier.
bool confirm(const SolutionPair& sp);

}  // namespace eqsum4
