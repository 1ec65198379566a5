#pragma once

#include <string>
#include <vector>

#include "eqsum4/mpoly.hpp"

namespace eqsum4 {

/// One checked identity of the n = 4 derivation. `difference` is the
/// polynomial that must vanish; it is zero when the step passes.
struct DerivationStep {
  std::string name;
  std::string claim;
  bool passed = false;
  MPoly difference;
};

struct DerivationReport {
  std::vector<DerivationStep> steps;
  bool passed() const;
};

/// Replays the elimination behind the n = 4 family symbolically:
/// x = (pm+s, qm+t, rm+u, wm+v), y = (pm-s, qm-t, rm-u, wm-v), then
/// t = -qu/r, s = -pv/w, then u = -r(p^4-w^4), v = w(q^4-r^4).
DerivationReport n4_derivation_check();

}  // namespace eqsum4
