#pragma once

#include <string>
#include <vector>

#include "polar/context.hpp"

namespace polar {

struct CheckOutcome {
  enum class Status { Pass, Fail, Skip };

  std::string name;
  Status status = Status::Pass;
  std::string detail;  // mismatch description, or the reason for a skip
};

// The full formula-versus-oracle battery on one context.  A check is
// skipped (never silently passed) when the instance exceeds an oracle's
// scale bound.  The checks mirror the acceptance suite:
//   facet-bijection, betti-vs-oracle, linear-resolution, linear-quotients,
//   shelling, regular-decomposition, vertex-decomposition, powers,
//   depth-stabilization, euler.
std::vector<CheckOutcome> run_cross_checks(const ArtinianContext& ctx,
                                           bool with_rational = false);

}  // namespace polar
