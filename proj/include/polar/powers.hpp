#pragma once

#include <cstdint>
#include <vector>

#include "polar/complex.hpp"
#include "polar/context.hpp"

namespace polar {

// Distinct products in a power enumeration are capped here.
inline constexpr std::size_t kMaxPowerGenerators = 100000;
// The raw number of k-fold products considered is capped here.
inline constexpr std::uint64_t kMaxPowerProducts = 5000000;

// A generator of the k-th power of the dual squarefree ideal: the product
// of k phi faces, recorded per variable as the ascending list of the k
// levels contributed (with multiplicity).  Total degree is n * k.
struct PowerGenerator {
  std::vector<std::vector<unsigned>> blocks;  // blocks[i-1] has length k, ascending

  unsigned k() const;
  unsigned degree() const;
  std::vector<unsigned> concatenated() const;  // blocks joined in variable order
  // Exponent vector over the polarized variables (level multiplicities).
  Monomial polar_monomial(const VertexTable& table) const;
};

bool operator==(const PowerGenerator& a, const PowerGenerator& b);
bool operator<(const PowerGenerator& a, const PowerGenerator& b);  // lex on concatenated()

// All distinct products of k generators, deduplicated and sorted
// ascending by lexicographic comparison of the concatenated blocks.
// Every product of k degree-n faces has degree n*k, so distinct products
// are incomparable and the list is exactly the minimal generating set of
// the power.  k = 0 is rejected; the product count and the deduplicated
// count are capped by the constants above.
std::vector<PowerGenerator> power_generators(const ArtinianContext& ctx, unsigned k);

// Closed form of the colon of the earlier generators by g in the order
// above: { x_{i,j} : j <= last(blocks_i) - 1 }.  Empty exactly for the
// first generator.
Face power_colon_set(const ArtinianContext& ctx, const PowerGenerator& g);

// Largest total degree of an lcm of at most min(k, n) standard monomials.
// For k >= n the per-variable champions x_i^{b_i - 1} are all available
// and the value is sum(b_i - 1); below that a branch-and-bound search
// over the divisibility-maximal standard monomials is used.
unsigned max_lcm_degree(const ArtinianContext& ctx, unsigned k);

// Largest colon-set size over the generators of the k-th power.  Computed
// by the lcm route always, and additionally by the colon route whenever
// the power enumeration is feasible; a disagreement between the two is an
// OracleError.
unsigned q_invariant(const ArtinianContext& ctx, unsigned k);

struct DepthProfile {
  struct Row {
    unsigned k = 0;
    unsigned q = 0;
    int depth = 0;
  };
  std::vector<Row> rows;          // k = 1..kmax
  unsigned stabilization_k = 0;   // first k with depth = n - 1; 0 if beyond kmax
};

// depth(k) = (sum of b_i) - q(k) - 1 for the quotient by the k-th power.
// The profile never increases, decreases strictly while above n - 1, and
// sits at n - 1 from stabilization on; violations are OracleErrors.
DepthProfile depth_profile(const ArtinianContext& ctx, unsigned kmax);

}  // namespace polar
