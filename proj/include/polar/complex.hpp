#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "polar/context.hpp"
#include "polar/monomial.hpp"

namespace polar {

// Polarized complexes above this many vertices are refused (faces carry
// 64-bit mask footprints inside the enumerative routines).
inline constexpr unsigned kMaxPolarVertices = 64;
// Face-set enumeration (Euler characteristic) is capped at this many faces.
inline constexpr std::size_t kMaxFaceEnumeration = std::size_t{1} << 20;

// The polarized variable x<var>_<level>, 1-based in both coordinates.
// Level j of variable i stands for the j-th copy of x_i introduced when a
// power x_i^c is split into the squarefree product x_{i,1}...x_{i,c}.
struct PolarVar {
  int var = 0;
  int level = 0;
  auto operator<=>(const PolarVar&) const = default;
};

// A face: a sorted set of polarized variables.  std::vector's builtin
// comparison is the lexicographic face order used for all listings.
using Face = std::vector<PolarVar>;

// Assigns consecutive bit positions to the polarized variables of a
// context: variable i contributes levels 1..b_i.
class VertexTable {
 public:
  explicit VertexTable(const std::vector<unsigned>& levels);

  unsigned size() const { return total_; }
  unsigned levels(int var) const { return levels_[static_cast<std::size_t>(var) - 1]; }
  int nvars() const { return static_cast<int>(levels_.size()); }
  unsigned index(PolarVar v) const;  // throws ValidationError if out of range
  PolarVar at(unsigned idx) const;
  Face all_vertices() const;
  std::uint64_t mask(const Face& f) const;
  Face face(std::uint64_t mask) const;

 private:
  std::vector<unsigned> levels_;
  std::vector<unsigned> offset_;
  unsigned total_ = 0;
};

// A simplicial complex given by an explicit vertex set and its facets
// (maximal faces).  Facets are kept sorted and form an antichain.  The
// complex {∅} (one empty facet) is distinct from the void complex (no
// facets at all).
struct SimplicialComplex {
  Face vertices;
  std::vector<Face> facets;
};

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

// Faces of the polarized generators: the generator with exponents c_i
// maps to { x_{i,j} : j <= c_i }.  Divisibility of generators corresponds
// to containment of faces, so the images of minimal generators form an
// antichain.
std::vector<Face> polarize(const ArtinianContext& ctx);

// The n-element face { x_{i, a_i + 1} : i = 1..n } attached to a standard
// monomial with exponents a_i.  Rejects monomials inside the ideal.
Face phi(const ArtinianContext& ctx, const Monomial& u);

// phi over all standard monomials: the minimal vertex covers of the
// polarized generator faces, listed in face order.
std::vector<Face> minimal_primes(const ArtinianContext& ctx);

// The complex on all polarized vertices whose facets are the complements
// of the phi faces.  Pure: every facet has size (sum of b_i) - n.
SimplicialComplex delta_facets(const ArtinianContext& ctx);

// link = maximal { F \ {v} : v in F, F facet }, on vertices minus v.
SimplicialComplex link_of(const SimplicialComplex& cplx, PolarVar v);
// deletion = maximal { F \ {v} : F facet }, on vertices minus v.
SimplicialComplex deletion_of(const SimplicialComplex& cplx, PolarVar v);
// cone = v joined to every facet; rejects a vertex already present.
SimplicialComplex cone(PolarVar apex, const SimplicialComplex& cplx);

// Reduced Euler characteristic: sum of (-1)^(|F| - 1) over all faces,
// the empty face included, so the complex {∅} has value -1.  The void
// complex has value 0.
long long reduced_euler_characteristic(const SimplicialComplex& cplx);

// Complements of the facets within the vertex set: the squarefree
// generators of the ideal whose Stanley-Reisner complex is the Alexander
// dual.  Applied to delta_facets this recovers minimal_primes.
std::vector<Face> alexander_dual_generators(const SimplicialComplex& cplx);

// Sorted-set helpers for faces.
bool face_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_minus(const Face& a, const Face& b);
bool face_contains(const Face& f, PolarVar v);

// Drops faces contained in another face of the list.
std::vector<Face> maximal_faces(std::vector<Face> faces);

// 0/1 exponent vector over the table's vertices; used to hand faces to
// the generic monomial routines.
Monomial face_monomial(const Face& f, const VertexTable& table);

std::string render(PolarVar v);          // "x2_1"
std::string render(const Face& f);       // "x1_1 x2_1", "-" when empty

}  // namespace polar
