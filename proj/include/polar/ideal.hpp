#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polar/monomial.hpp"

namespace polar {

// A monomial ideal given by its minimal generators, kept in canonical
// (degree, lex) order.  Always produced through minimalize(), which
// guarantees the generators form an antichain under divisibility.
struct MonomialIdeal {
  int n = 0;  // number of variables
  std::vector<Monomial> gens;
};

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);
bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b);

// True iff some generator divides m.
bool in_ideal(const MonomialIdeal& ideal, const Monomial& m);

// Drops generators divisible by another one, deduplicates, sorts
// canonically.  Rejects an empty generating set ("empty ideal") and any
// unit generator ("unit ideal").
MonomialIdeal minimalize(std::vector<Monomial> gens, int n);

// The ideal generated by the given squarefree monomials together with the
// squares of all n variables.  Rejects non-squarefree input.  The result
// is zero-dimensional with every pure-power bound 1 or 2.
MonomialIdeal whisker_from_complex(const std::vector<Monomial>& squarefree, int n);

// Deterministic pseudo-random zero-dimensional ideal: pure powers
// x_i^{b_i} with b_i uniform in [1, bmax], plus `extra` monomials drawn
// inside the box spanned by the b_i (skipped when every b_i = 1, since
// the box then contains only the unit).  Same arguments, same result, on
// every platform.
MonomialIdeal random_artinian(int n, unsigned bmax, int extra, std::uint64_t seed);

// Text format:
//   n <int>
//   gen <e1> <e2> ... <en>     (one line per generator)
// '#' starts a comment; blank lines are ignored.  print_ideal() emits the
// canonical form and parse_ideal(print_ideal(I)) reproduces I exactly.
MonomialIdeal parse_ideal(std::istream& in, const std::string& source_name);
MonomialIdeal parse_ideal_file(const std::string& path);
std::string print_ideal(const MonomialIdeal& ideal);

}  // namespace polar
