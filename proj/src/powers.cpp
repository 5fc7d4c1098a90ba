#include "polar/powers.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "polar/errors.hpp"
#include "polar/numeric.hpp"

namespace polar {

unsigned PowerGenerator::k() const {
  return blocks.empty() ? 0 : static_cast<unsigned>(blocks.front().size());
}

unsigned PowerGenerator::degree() const {
  return static_cast<unsigned>(blocks.size()) * k();
}

std::vector<unsigned> PowerGenerator::concatenated() const {
  std::vector<unsigned> out;
  out.reserve(degree());
  for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
  return out;
}

Monomial PowerGenerator::polar_monomial(const VertexTable& table) const {
  Monomial m(table.size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (unsigned level : blocks[i])
      ++m.exp[table.index(PolarVar{static_cast<int>(i) + 1, static_cast<int>(level)})];
  return m;
}

bool operator==(const PowerGenerator& a, const PowerGenerator& b) {
  return a.blocks == b.blocks;
}

// Blocks all have length k, so comparing the block lists entrywise is the
// same as lex comparison of the concatenations.
bool operator<(const PowerGenerator& a, const PowerGenerator& b) {
  return a.blocks < b.blocks;
}

std::vector<PowerGenerator> power_generators(const ArtinianContext& ctx, unsigned k) {
  if (k == 0) throw ValidationError("power exponent k must be positive");
  const std::size_t ell = ctx.length();
  const std::uint64_t products = binomial_u64(static_cast<unsigned>(ell) + k - 1, k);
  if (products > kMaxPowerProducts)
    throw ScaleError("power enumeration would consider " + std::to_string(products) +
                     " products, more than the limit " + std::to_string(kMaxPowerProducts));

  // Level vector of each factor: variable i contributes level a_i + 1.
  const int n = ctx.n();
  std::vector<std::vector<unsigned>> factor_levels;
  factor_levels.reserve(ell);
  for (const Monomial& u : ctx.standard) {
    std::vector<unsigned> lv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      lv[static_cast<std::size_t>(i)] = u.exp[static_cast<std::size_t>(i)] + 1;
    factor_levels.push_back(std::move(lv));
  }

  // Multisets of k factors, indices non-decreasing; products collapse in
  // the set.  The set's order on block lists is the required total order.
  std::set<std::vector<std::vector<unsigned>>> seen;
  std::vector<std::size_t> pick(k, 0);
  auto emit = [&]() {
    std::vector<std::vector<unsigned>> blocks(
        static_cast<std::size_t>(n), std::vector<unsigned>());
    for (std::size_t f = 0; f < k; ++f)
      for (int i = 0; i < n; ++i)
        blocks[static_cast<std::size_t>(i)].push_back(
            factor_levels[pick[f]][static_cast<std::size_t>(i)]);
    for (auto& block : blocks) std::sort(block.begin(), block.end());
    seen.insert(std::move(blocks));
    if (seen.size() > kMaxPowerGenerators)
      throw ScaleError("power has more than " + std::to_string(kMaxPowerGenerators) +
                       " distinct generators");
  };
  while (true) {
    emit();
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == ell - 1) --pos;
    if (pos == 0) break;
    const std::size_t next = pick[pos - 1] + 1;
    for (std::size_t f = pos - 1; f < k; ++f) pick[f] = next;
  }

  std::vector<PowerGenerator> out;
  out.reserve(seen.size());
  for (const auto& blocks : seen) out.push_back(PowerGenerator{blocks});
  return out;
}

Face power_colon_set(const ArtinianContext& ctx, const PowerGenerator& g) {
  Face f;
  for (int i = 1; i <= ctx.n(); ++i) {
    const unsigned top = g.blocks[static_cast<std::size_t>(i - 1)].back();
    for (unsigned j = 1; j + 1 <= top; ++j) f.push_back(PolarVar{i, static_cast<int>(j)});
  }
  return f;
}

unsigned max_lcm_degree(const ArtinianContext& ctx, unsigned k) {
  if (k == 0) throw ValidationError("power exponent k must be positive");
  const int n = ctx.n();
  if (k >= static_cast<unsigned>(n)) {
    // The champions x_i^{b_i - 1} all fit into n slots.
    unsigned total = 0;
    for (unsigned bi : ctx.b) total += bi - 1;
    return total;
  }

  // Repetitions never enlarge an lcm, and neither does a monomial below a
  // divisibility-maximal one, so search subsets of the maximal standard
  // monomials only.
  std::vector<Monomial> champs;
  for (const Monomial& u : ctx.standard) {
    bool below = false;
    for (const Monomial& v : ctx.standard)
      if (u != v && u.divides(v)) {
        below = true;
        break;
      }
    if (!below) champs.push_back(u);
  }
  std::sort(champs.begin(), champs.end(),
            [](const Monomial& a, const Monomial& b) { return b.degree() < a.degree(); });

  // suffix_max[t][i]: largest exponent of x_{i+1} among champs[t..].
  const std::size_t c = champs.size();
  std::vector<std::vector<unsigned>> suffix_max(
      c + 1, std::vector<unsigned>(static_cast<std::size_t>(n), 0));
  for (std::size_t t = c; t > 0; --t)
    for (int i = 0; i < n; ++i)
      suffix_max[t - 1][static_cast<std::size_t>(i)] =
          std::max(suffix_max[t][static_cast<std::size_t>(i)],
                   champs[t - 1].exp[static_cast<std::size_t>(i)]);

  unsigned best = 0;
  std::vector<unsigned> cur(static_cast<std::size_t>(n), 0);
  auto dfs = [&](auto&& self, std::size_t start, unsigned picked) -> void {
    unsigned cur_deg = std::accumulate(cur.begin(), cur.end(), 0u);
    best = std::max(best, cur_deg);
    if (picked == k || start == c) return;
    unsigned potential = 0;
    for (int i = 0; i < n; ++i)
      potential += std::max(cur[static_cast<std::size_t>(i)],
                            suffix_max[start][static_cast<std::size_t>(i)]);
    if (potential <= best) return;
    for (std::size_t t = start; t < c; ++t) {
      std::vector<unsigned> saved = cur;
      for (int i = 0; i < n; ++i)
        cur[static_cast<std::size_t>(i)] =
            std::max(cur[static_cast<std::size_t>(i)], champs[t].exp[static_cast<std::size_t>(i)]);
      self(self, t + 1, picked + 1);
      cur = std::move(saved);
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

unsigned q_invariant(const ArtinianContext& ctx, unsigned k) {
  const unsigned via_lcm = max_lcm_degree(ctx, k);
  std::optional<std::vector<PowerGenerator>> gens;
  try {
    gens = power_generators(ctx, k);
  } catch (const ScaleError&) {
    // Enumeration out of reach; the lcm route stands alone.
  }
  if (gens) {
    unsigned via_colon = 0;
    for (const PowerGenerator& g : *gens)
      via_colon = std::max(via_colon,
                           static_cast<unsigned>(power_colon_set(ctx, g).size()));
    if (via_colon != via_lcm)
      throw OracleError("colon-route q = " + std::to_string(via_colon) +
                        " disagrees with lcm-route q = " + std::to_string(via_lcm));
  }
  return via_lcm;
}

DepthProfile depth_profile(const ArtinianContext& ctx, unsigned kmax) {
  if (kmax == 0) throw ValidationError("kmax must be positive");
  const int n = ctx.n();
  const int floor_depth = n - 1;
  const unsigned total = ctx.total_levels();
  DepthProfile profile;
  for (unsigned k = 1; k <= kmax; ++k) {
    const unsigned q = q_invariant(ctx, k);
    const int depth = static_cast<int>(total) - static_cast<int>(q) - 1;
    if (depth < floor_depth)
      throw OracleError("depth fell below the floor n - 1");
    if (!profile.rows.empty()) {
      const int prev = profile.rows.back().depth;
      if (depth > prev) throw OracleError("depth profile increased");
      if (prev > floor_depth && depth >= prev)
        throw OracleError("depth profile stalled above the floor n - 1");
    }
    profile.rows.push_back(DepthProfile::Row{k, q, depth});
    if (profile.stabilization_k == 0 && depth == floor_depth)
      profile.stabilization_k = k;
  }
  return profile;
}

}  // namespace polar
