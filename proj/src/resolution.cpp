#include "polar/resolution.hpp"

#include <algorithm>

#include "polar/errors.hpp"
#include "polar/numeric.hpp"

namespace polar {

std::vector<LGenerator> admissible_order(const ArtinianContext& ctx) {
  std::vector<Monomial> sources = ctx.standard;
  std::sort(sources.begin(), sources.end(), lex_less);
  std::vector<LGenerator> out;
  out.reserve(sources.size());
  for (std::size_t r = 0; r < sources.size(); ++r)
    out.push_back(LGenerator{sources[r], phi(ctx, sources[r]), static_cast<int>(r) + 1});
  return out;
}

Face colon_set(const ArtinianContext& ctx, const LGenerator& g) {
  Face f;
  for (int i = 1; i <= ctx.n(); ++i) {
    unsigned a = g.source.exp[static_cast<std::size_t>(i - 1)];
    for (unsigned j = 1; j <= a; ++j) f.push_back(PolarVar{i, static_cast<int>(j)});
  }
  return f;
}

const LGenerator& decomposition_function(const std::vector<LGenerator>& order, const Face& m) {
  for (const LGenerator& g : order)
    if (face_subset(g.face, m)) return g;
  throw ValidationError("face " + render(m) + " contains no generator face");
}

LGenerator decomposition_function(const ArtinianContext& ctx, const Face& m) {
  return decomposition_function(admissible_order(ctx), m);
}

RegularityReport check_regular(const ArtinianContext& ctx) {
  const std::vector<LGenerator> order = admissible_order(ctx);
  RegularityReport report;
  for (const LGenerator& g : order) {
    const Face set_g = colon_set(ctx, g);
    for (PolarVar v : set_g) {
      const LGenerator& img = decomposition_function(order, face_union(g.face, Face{v}));
      // img must precede g: its source is g's with one exponent lowered.
      bool contained = face_subset(colon_set(ctx, img), set_g);
      report.witnesses.push_back(RegularityWitness{g.rank, v, img.rank, contained});
      report.regular = report.regular && contained && img.rank < g.rank;
    }
  }
  return report;
}

BettiData betti_formula(const ArtinianContext& ctx) {
  const std::vector<std::uint64_t> h = h_vector(ctx);
  const unsigned maxdeg = static_cast<unsigned>(h.size()) - 1;
  BettiData out;
  out.projdim = static_cast<int>(maxdeg) + 1;
  out.depth = static_cast<int>(ctx.total_levels()) - out.projdim;
  out.betti.assign(static_cast<std::size_t>(out.projdim) + 1, 0);
  out.betti[0] = 1;
  for (unsigned i = 1; i <= maxdeg + 1; ++i) {
    std::uint64_t sum = 0;
    for (unsigned j = 0; j <= maxdeg; ++j)
      sum = checked_add_u64(sum, checked_mul_u64(h[j], binomial_u64(j, i - 1)));
    out.betti[i] = sum;
  }
  return out;
}

std::vector<Face> shelling_order(const ArtinianContext& ctx) {
  VertexTable table(ctx.b);
  const Face all = table.all_vertices();
  std::vector<Face> out;
  out.reserve(ctx.length());
  for (const LGenerator& g : admissible_order(ctx))
    out.push_back(face_minus(all, g.face));
  return out;
}

}  // namespace polar
