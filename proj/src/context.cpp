#include "polar/context.hpp"

#include <algorithm>
#include <numeric>

#include "polar/errors.hpp"
#include "polar/numeric.hpp"

namespace polar {

unsigned ArtinianContext::total_levels() const {
  return std::accumulate(b.begin(), b.end(), 0u);
}

unsigned ArtinianContext::max_standard_degree() const {
  // standard is sorted by (degree, lex), so the last entry has max degree.
  return standard.back().degree();
}

bool ArtinianContext::is_standard(const Monomial& m) const {
  return std::binary_search(standard.begin(), standard.end(), m, canonical_less);
}

std::size_t ArtinianContext::standard_index(const Monomial& m) const {
  auto it = std::lower_bound(standard.begin(), standard.end(), m, canonical_less);
  if (it == standard.end() || *it != m)
    throw ValidationError("not a standard monomial: " + render(m));
  return static_cast<std::size_t>(it - standard.begin());
}

ArtinianContext build_context(const MonomialIdeal& ideal) {
  ArtinianContext ctx;
  ctx.ideal = ideal;
  const int n = ideal.n;
  ctx.b.assign(static_cast<std::size_t>(n), 0);

  // The minimal generators form an antichain, so for each variable there
  // is at most one pure-power generator; its exponent is the bound b_i.
  for (const Monomial& g : ideal.gens) {
    int support_var = -1;
    bool pure = true;
    for (int i = 0; i < n && pure; ++i) {
      if (g.exp[static_cast<std::size_t>(i)] == 0) continue;
      if (support_var >= 0)
        pure = false;
      else
        support_var = i;
    }
    if (pure && support_var >= 0)
      ctx.b[static_cast<std::size_t>(support_var)] = g.exp[static_cast<std::size_t>(support_var)];
  }
  for (int i = 0; i < n; ++i) {
    unsigned bi = ctx.b[static_cast<std::size_t>(i)];
    if (bi == 0)
      throw ValidationError("not zero-dimensional: x" + std::to_string(i + 1));
    if (bi > kMaxLevel)
      throw ScaleError("pure-power bound " + std::to_string(bi) + " for x" +
                       std::to_string(i + 1) + " exceeds the limit " +
                       std::to_string(kMaxLevel));
  }

  std::uint64_t cells = 1;
  for (unsigned bi : ctx.b) cells = checked_mul_u64(cells, bi);
  if (cells > kMaxBoxCells)
    throw ScaleError("standard-monomial box has " + std::to_string(cells) +
                     " cells, more than the limit " + std::to_string(kMaxBoxCells));

  // Odometer scan of the box [0, b_1) x ... x [0, b_n); everything the
  // ideal misses is standard.
  Monomial m(static_cast<std::size_t>(n));
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    if (!in_ideal(ideal, m)) ctx.standard.push_back(m);
    for (int i = 0; i < n; ++i) {
      std::size_t ii = static_cast<std::size_t>(i);
      if (++m.exp[ii] < ctx.b[ii]) break;
      m.exp[ii] = 0;
    }
  }
  std::sort(ctx.standard.begin(), ctx.standard.end(), canonical_less);
  return ctx;
}

std::vector<std::uint64_t> h_vector(const ArtinianContext& ctx) {
  std::vector<std::uint64_t> h(ctx.max_standard_degree() + 1, 0);
  for (const Monomial& u : ctx.standard) ++h[u.degree()];
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace polar
