#pragma once

#include <cstdint>
#include <vector>

#include "polar/complex.hpp"
#include "polar/context.hpp"

namespace polar {

// One generator of the squarefree ideal dual to the polarized complex:
// the phi face of a standard monomial, tagged with its 1-based position
// in the admissible order.
struct LGenerator {
  Monomial source;  // the standard monomial
  Face face;        // phi(source)
  int rank = 0;
};

// Standard monomials sorted by plain lex on exponent vectors, ascending.
// This refines componentwise divisibility, which is what makes the
// successive colon ideals below linear.
std::vector<LGenerator> admissible_order(const ArtinianContext& ctx);

// Closed form of the colon of the earlier generators by g: the variables
// { x_{i,j} : j <= a_i } where a is g's source exponent vector.  Its size
// is deg(source).  The acceptance suite compares this against the
// explicitly minimalized colon computed by the oracle.
Face colon_set(const ArtinianContext& ctx, const LGenerator& g);

// The earliest generator, in admissible order, whose face is contained in
// m.  Rejects m containing no generator face.  When m is a generator face
// extended by one colon variable x_{i,j}, the result is the generator
// whose source has exponent i replaced by j - 1.
const LGenerator& decomposition_function(const std::vector<LGenerator>& order, const Face& m);
LGenerator decomposition_function(const ArtinianContext& ctx, const Face& m);

struct RegularityWitness {
  int gen_rank = 0;        // the generator g being extended
  PolarVar var;            // the colon variable adjoined to its face
  int image_rank = 0;      // rank of decomposition_function(face(g) + var)
  bool contained = false;  // colon_set(image) inside colon_set(g)?
};

struct RegularityReport {
  bool regular = true;
  std::vector<RegularityWitness> witnesses;  // one row per (g, var) pair
};

// Checks, for every generator and every variable of its colon set, that
// the decomposition function lands on a generator with smaller colon set.
RegularityReport check_regular(const ArtinianContext& ctx);

struct BettiData {
  std::vector<std::uint64_t> betti;  // betti[i], quotient convention, betti[0] = 1
  int projdim = 0;
  int depth = 0;
};

// Betti numbers of the polarized quotient ring from the h-vector alone:
//   betti_i = sum_j h_j * C(j, i - 1)        (i >= 1)
// with projdim = (max standard degree) + 1 and
// depth = (number of polarized variables) - projdim.
BettiData betti_formula(const ArtinianContext& ctx);

// Facet complements listed in admissible order; a shelling of the
// polarized complex.
std::vector<Face> shelling_order(const ArtinianContext& ctx);

}  // namespace polar
