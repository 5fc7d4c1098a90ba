#pragma once

#include <cstdint>
#include <vector>

#include "polar/ideal.hpp"

namespace polar {

// Per-variable pure-power bounds above this are refused.
inline constexpr unsigned kMaxLevel = 64;
// The standard-monomial box scan is capped at this many cells.
inline constexpr std::uint64_t kMaxBoxCells = std::uint64_t{1} << 22;

// A zero-dimensional ideal together with the data every other module
// consumes: the pure-power bound b_i of each variable (x_i^{b_i} is a
// generator, x_i^{b_i - 1} is not in the ideal) and the standard
// monomials, i.e. the monomials outside the ideal.  Both are finite
// exactly because the ideal is zero-dimensional.
struct ArtinianContext {
  MonomialIdeal ideal;
  std::vector<unsigned> b;
  std::vector<Monomial> standard;  // canonical (degree, lex) order

  int n() const { return ideal.n; }
  std::size_t length() const { return standard.size(); }
  unsigned total_levels() const;          // sum of the b_i
  unsigned max_standard_degree() const;   // degree of the largest standard monomial
  bool is_standard(const Monomial& m) const;
  // Position of m in the canonical standard listing; throws if absent.
  std::size_t standard_index(const Monomial& m) const;
};

// Validates zero-dimensionality ("not zero-dimensional: x<i>" names the
// first variable with no pure power among the generators), enforces the
// level and box bounds, and enumerates the standard monomials.
ArtinianContext build_context(const MonomialIdeal& ideal);

// Degree histogram of the standard monomials.  h[0] = 1 always; there are
// no internal or trailing zeros because the standard set is closed under
// division.
std::vector<std::uint64_t> h_vector(const ArtinianContext& ctx);

}  // namespace polar
