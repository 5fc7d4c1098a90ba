#include "polar/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "polar/errors.hpp"

namespace polar {

VertexTable::VertexTable(const std::vector<unsigned>& levels) : levels_(levels) {
  offset_.reserve(levels_.size());
  for (unsigned b : levels_) {
    offset_.push_back(total_);
    total_ += b;
  }
  if (total_ > kMaxPolarVertices)
    throw ScaleError("polarization needs " + std::to_string(total_) +
                     " vertices, more than the limit " + std::to_string(kMaxPolarVertices));
}

unsigned VertexTable::index(PolarVar v) const {
  if (v.var < 1 || v.var > nvars() || v.level < 1 ||
      static_cast<unsigned>(v.level) > levels_[static_cast<std::size_t>(v.var - 1)])
    throw ValidationError("polarized variable " + render(v) + " is out of range");
  return offset_[static_cast<std::size_t>(v.var - 1)] + static_cast<unsigned>(v.level) - 1;
}

PolarVar VertexTable::at(unsigned idx) const {
  for (int i = nvars(); i >= 1; --i) {
    unsigned off = offset_[static_cast<std::size_t>(i - 1)];
    if (idx >= off) return PolarVar{i, static_cast<int>(idx - off) + 1};
  }
  throw ValidationError("vertex index out of range");
}

Face VertexTable::all_vertices() const {
  Face f;
  f.reserve(total_);
  for (unsigned idx = 0; idx < total_; ++idx) f.push_back(at(idx));
  return f;
}

std::uint64_t VertexTable::mask(const Face& f) const {
  std::uint64_t m = 0;
  for (PolarVar v : f) m |= std::uint64_t{1} << index(v);
  return m;
}

Face VertexTable::face(std::uint64_t m) const {
  Face f;
  for (unsigned idx = 0; idx < total_; ++idx)
    if (m >> idx & 1) f.push_back(at(idx));
  return f;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.vertices == b.vertices && a.facets == b.facets;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_minus(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool face_contains(const Face& f, PolarVar v) {
  return std::binary_search(f.begin(), f.end(), v);
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
      if (i != j && faces[i].size() < faces[j].size() && face_subset(faces[i], faces[j]))
        dominated = true;
    if (!dominated) out.push_back(faces[i]);
  }
  return out;
}

Monomial face_monomial(const Face& f, const VertexTable& table) {
  Monomial m(table.size());
  for (PolarVar v : f) m.exp[table.index(v)] = 1;
  return m;
}

std::vector<Face> polarize(const ArtinianContext& ctx) {
  VertexTable table(ctx.b);  // enforces the vertex bound
  std::vector<Face> out;
  out.reserve(ctx.ideal.gens.size());
  for (const Monomial& g : ctx.ideal.gens) {
    Face f;
    for (int i = 1; i <= ctx.n(); ++i)
      for (unsigned j = 1; j <= g.exp[static_cast<std::size_t>(i - 1)]; ++j)
        f.push_back(PolarVar{i, static_cast<int>(j)});
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Face phi(const ArtinianContext& ctx, const Monomial& u) {
  if (static_cast<int>(u.nvars()) != ctx.n())
    throw ValidationError("monomial arity mismatch");
  if (!ctx.is_standard(u))
    throw ValidationError("not a standard monomial: " + render(u));
  Face f;
  f.reserve(static_cast<std::size_t>(ctx.n()));
  for (int i = 1; i <= ctx.n(); ++i)
    f.push_back(PolarVar{i, static_cast<int>(u.exp[static_cast<std::size_t>(i - 1)]) + 1});
  return f;
}

std::vector<Face> minimal_primes(const ArtinianContext& ctx) {
  std::vector<Face> out;
  out.reserve(ctx.length());
  for (const Monomial& u : ctx.standard) out.push_back(phi(ctx, u));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex delta_facets(const ArtinianContext& ctx) {
  VertexTable table(ctx.b);
  SimplicialComplex cplx;
  cplx.vertices = table.all_vertices();
  cplx.facets.reserve(ctx.length());
  for (const Monomial& u : ctx.standard)
    cplx.facets.push_back(face_minus(cplx.vertices, phi(ctx, u)));
  std::sort(cplx.facets.begin(), cplx.facets.end());
  return cplx;
}

SimplicialComplex link_of(const SimplicialComplex& cplx, PolarVar v) {
  std::vector<Face> shrunk;
  for (const Face& f : cplx.facets)
    if (face_contains(f, v)) shrunk.push_back(face_minus(f, Face{v}));
  SimplicialComplex out;
  out.vertices = face_minus(cplx.vertices, Face{v});
  out.facets = maximal_faces(std::move(shrunk));
  return out;
}

SimplicialComplex deletion_of(const SimplicialComplex& cplx, PolarVar v) {
  std::vector<Face> kept;
  for (const Face& f : cplx.facets)
    kept.push_back(face_contains(f, v) ? face_minus(f, Face{v}) : f);
  SimplicialComplex out;
  out.vertices = face_minus(cplx.vertices, Face{v});
  out.facets = maximal_faces(std::move(kept));
  return out;
}

SimplicialComplex cone(PolarVar apex, const SimplicialComplex& cplx) {
  if (face_contains(cplx.vertices, apex))
    throw ValidationError("cone vertex " + render(apex) + " already present");
  SimplicialComplex out;
  out.vertices = face_union(cplx.vertices, Face{apex});
  out.facets.reserve(cplx.facets.size());
  for (const Face& f : cplx.facets) out.facets.push_back(face_union(f, Face{apex}));
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

long long reduced_euler_characteristic(const SimplicialComplex& cplx) {
  if (cplx.facets.empty()) return 0;  // void complex
  if (cplx.vertices.size() > kMaxPolarVertices)
    throw ScaleError("Euler characteristic needs at most " +
                     std::to_string(kMaxPolarVertices) + " vertices");
  // Index vertices locally and walk the downward closure of the facets.
  Face verts = cplx.vertices;
  auto bit = [&](PolarVar v) -> std::uint64_t {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v)
      throw ValidationError("facet vertex " + render(v) + " missing from vertex set");
    return std::uint64_t{1} << (it - verts.begin());
  };
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> stack;
  for (const Face& f : cplx.facets) {
    std::uint64_t m = 0;
    for (PolarVar v : f) m |= bit(v);
    if (seen.insert(m).second) stack.push_back(m);
  }
  long long chi = 0;
  while (!stack.empty()) {
    std::uint64_t m = stack.back();
    stack.pop_back();
    chi += (__builtin_popcountll(m) % 2 == 1) ? 1 : -1;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      std::uint64_t sub = m & ~(rest & (~rest + 1));
      if (seen.insert(sub).second) {
        if (seen.size() > kMaxFaceEnumeration)
          throw ScaleError("face enumeration exceeds the limit " +
                           std::to_string(kMaxFaceEnumeration));
        stack.push_back(sub);
      }
    }
  }
  return chi;
}

std::vector<Face> alexander_dual_generators(const SimplicialComplex& cplx) {
  std::vector<Face> out;
  out.reserve(cplx.facets.size());
  for (const Face& f : cplx.facets) out.push_back(face_minus(cplx.vertices, f));
  std::sort(out.begin(), out.end());
  return out;
}

std::string render(PolarVar v) {
  return "x" + std::to_string(v.var) + "_" + std::to_string(v.level);
}

std::string render(const Face& f) {
  if (f.empty()) return "-";
  std::string out;
  for (PolarVar v : f) {
    if (!out.empty()) out += ' ';
    out += render(v);
  }
  return out;
}

}  // namespace polar
