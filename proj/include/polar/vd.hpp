#pragma once

#include <memory>
#include <string>
#include <utility>

#include "polar/complex.hpp"
#include "polar/context.hpp"

namespace polar {

// A recursive witness that the polarized complex of an ideal is vertex
// decomposable.  Each node records the ideal whose complex it certifies.
//
// A Shed node asserts that vertex x_{i,1} (i = the largest variable with
// b_i > 1) is a shedding vertex, and that
//   - the deletion is the del-branch complex coned over cone_chain
//     (the levels x_{i,b_i}, ..., x_{i,2}, which the del-branch ideal no
//     longer uses), and
//   - the link, after shifting every level of variable i down by one,
//     is the link-branch complex joined with the simplex on link_pad
//     (levels of other variables that drop out of the link-branch ideal).
// Leaves certify complexes with a single facet; LeafTrivial is the
// complex {∅} of the ideal generated by all variables.
struct VDCertificate {
  enum class Kind { LeafSimplex, LeafTrivial, Shed };

  Kind kind = Kind::LeafTrivial;
  MonomialIdeal ideal;
  PolarVar vertex;                      // Shed only
  std::vector<PolarVar> cone_chain;     // Shed only: (i, b_i) down to (i, 2)
  std::vector<PolarVar> link_pad;       // Shed only; may be empty
  std::unique_ptr<VDCertificate> del_child;
  std::unique_ptr<VDCertificate> link_child;
};

// The two smaller zero-dimensional ideals obtained by splitting the
// standard monomials on divisibility by x_i (1-based var, b_i > 1
// required, else "variable exhausted"):
//   first:  standard set { u : x_i does not divide u }  (x_i joins the ideal)
//   second: standard set { u / x_i : x_i divides u }
// The second is reconstructed from its standard set: the minimal
// monomials outside it, found inside the box one step beyond the set's
// componentwise maxima.
std::pair<MonomialIdeal, MonomialIdeal> derived_ideals(const ArtinianContext& ctx, int var);

// Builds the certificate by recursion on the derived ideals, shedding
// x_{i,1} for the largest i with b_i > 1.  Depth is at most
// sum(b_i - 1) + 1.
VDCertificate vd_certificate(const ArtinianContext& ctx);

struct VerifyResult {
  bool ok = true;
  std::string witness;  // node path and failed condition when !ok
};

// Replays a certificate against a complex: confirms the complex matches
// the root ideal, then at every Shed node recomputes deletion and link
// and checks the claimed equalities facet set by facet set before
// recursing.  Nothing is trusted from the certificate beyond the ideals
// it names.
VerifyResult verify_certificate(const SimplicialComplex& cplx, const VDCertificate& cert);

// Stable indented text form, used by the CLI and golden tests.
std::string certificate_text(const VDCertificate& cert);

}  // namespace polar
