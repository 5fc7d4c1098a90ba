#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polar/complex.hpp"
#include "polar/monomial.hpp"

namespace polar {

// Brute-force facet enumeration works up to this many vertices.
inline constexpr unsigned kMaxBruteVertices = 24;
// Homology-based Betti numbers: caps on the presented ideal.
inline constexpr std::size_t kMaxOracleGenerators = 48;
inline constexpr int kMaxOracleVariables = 16;
// Per-multidegree simplicial complexes are capped at 2^14 faces.
inline constexpr int kMaxKoszulSupport = 14;
// The multidegree lattice scanned for homology is capped here.
inline constexpr std::size_t kMaxLcmLattice = 200000;
// Brute-force vertex-decomposability recursion works up to this support.
inline constexpr unsigned kMaxVdVertices = 12;

// Everything in this header recomputes, slowly and from first principles,
// quantities the rest of the library produces by closed formulas.  The
// two routes are compared in the tests; these functions share no code
// with the formula side.

// Maximal subsets of `vertices` containing no generator face, by mask
// enumeration with a maximality filter.
std::vector<Face> facets_bruteforce(const std::vector<Face>& generator_faces,
                                    const Face& vertices);

// Graded Betti numbers of a monomial ideal, from simplicial homology of
// the upper Koszul complexes K^a = { squarefree t <= a : a - t in the
// ideal } at every multidegree a in the lcm lattice of the generators.
// Ranks are computed over GF(2) and over the prime field with
// 2^31 - 1 elements; any disagreement is an OracleError.  When
// with_rational is set the ranks are recomputed a third time over the
// rationals with exact fraction arithmetic.
struct GradedBetti {
  // (homological index i, total degree d) -> beta_{i,d} of the ideal.
  std::map<std::pair<int, unsigned>, std::uint64_t> ideal_table;

  // (1, beta_1, beta_2, ...) of the quotient ring: index shifted by one,
  // leading 1 for the ring itself.
  std::vector<std::uint64_t> quotient_totals() const;
  int quotient_projdim() const;
};

GradedBetti betti_bruteforce(std::vector<Monomial> gens, int numvars,
                             bool with_rational = false);

// depth = numvars - projdim of the quotient (Auslander-Buchsbaum).
int depth_bruteforce(const std::vector<Monomial>& gens, int numvars);

// Pairwise shelling condition: for all i < j there is l < j with
// |F_j \ F_l| = 1 and F_j ∩ F_i ⊆ F_j ∩ F_l.
bool is_shelling(const std::vector<Face>& ordered_facets);

// The minimal generators of ({g_1, ..., g_{j-1}} : g_j): every g_t / gcd
// with t < j, then pruned to the divisibility-minimal ones.  1-based j.
std::vector<Monomial> minimal_colon_generators(const std::vector<Monomial>& ordered_gens,
                                               std::size_t j);

// True iff every successive colon above is generated by variables.  On
// failure first_fail is the 1-based position of the offending generator.
struct QuotientsCheck {
  bool ok = true;
  int first_fail = 0;
};
QuotientsCheck verify_linear_quotients(const std::vector<Monomial>& ordered_gens);

// Definition-chasing recursion with memoization: a complex is vertex
// decomposable iff it is a simplex (one facet, {∅} included) or some
// vertex sheds - every facet of its deletion is a facet - with deletion
// and link both vertex decomposable.
bool is_vertex_decomposable_bruteforce(const SimplicialComplex& cplx);

}  // namespace polar
