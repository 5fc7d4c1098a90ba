#include "polar/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polar/complex.hpp"
#include "polar/errors.hpp"
#include "polar/oracle.hpp"
#include "polar/powers.hpp"
#include "polar/resolution.hpp"
#include "polar/vd.hpp"

namespace polar {

namespace {

// Positions above this skip the cubic-time explicit colon comparison on
// power generators (every cheaper invariant is still checked).
constexpr std::size_t kMaxColonPositions = 400;

using CheckBody = std::function<bool(std::string&)>;

void run_check(std::vector<CheckOutcome>& out, const std::string& name,
               const CheckBody& body) {
  CheckOutcome outcome;
  outcome.name = name;
  try {
    std::string detail;
    const bool ok = body(detail);
    outcome.status = ok ? CheckOutcome::Status::Pass : CheckOutcome::Status::Fail;
    outcome.detail = detail;
  } catch (const ScaleError& e) {
    outcome.status = CheckOutcome::Status::Skip;
    outcome.detail = e.what();
  } catch (const std::exception& e) {
    outcome.status = CheckOutcome::Status::Fail;
    outcome.detail = e.what();
  }
  out.push_back(std::move(outcome));
}

// Degree-one squarefree monomial over the polarized variables -> vertex.
bool single_vertex(const Monomial& m, const VertexTable& table, PolarVar& v) {
  if (m.degree() != 1) return false;
  for (std::size_t i = 0; i < m.exp.size(); ++i)
    if (m.exp[i] == 1) {
      v = table.at(static_cast<unsigned>(i));
      return true;
    }
  return false;
}

bool colon_sets_match(const std::vector<Monomial>& ordered, const VertexTable& table,
                      std::size_t j, const Face& expected, std::string& detail) {
  Face got;
  for (const Monomial& c : minimal_colon_generators(ordered, j)) {
    PolarVar v;
    if (!single_vertex(c, table, v)) {
      detail = "colon at position " + std::to_string(j) +
               " has the non-variable generator " + render(c);
      return false;
    }
    got.push_back(v);
  }
  std::sort(got.begin(), got.end());
  if (got != expected) {
    detail = "colon at position " + std::to_string(j) + " is {" + render(got) +
             "}, closed form says {" + render(expected) + "}";
    return false;
  }
  return true;
}

}  // namespace

std::vector<CheckOutcome> run_cross_checks(const ArtinianContext& ctx,
                                           bool with_rational) {
  std::vector<CheckOutcome> out;
  const VertexTable table(ctx.b);
  const SimplicialComplex delta = delta_facets(ctx);
  const std::vector<LGenerator> order = admissible_order(ctx);
  std::vector<Monomial> lgens;
  for (const LGenerator& g : order) lgens.push_back(face_monomial(g.face, table));
  const int numvars = static_cast<int>(table.size());

  run_check(out, "facet-bijection", [&](std::string& detail) {
    const std::vector<Face> brute = facets_bruteforce(polarize(ctx), table.all_vertices());
    if (brute != delta.facets) {
      detail = "brute-force facets differ from the standard-monomial complements";
      return false;
    }
    if (alexander_dual_generators(delta) != minimal_primes(ctx)) {
      detail = "facet complements differ from the phi faces";
      return false;
    }
    return true;
  });

  run_check(out, "betti-vs-oracle", [&](std::string& detail) {
    const BettiData formula = betti_formula(ctx);
    const GradedBetti oracle = betti_bruteforce(lgens, numvars, with_rational);
    if (formula.betti != oracle.quotient_totals()) {
      detail = "Betti numbers differ from the homology computation";
      return false;
    }
    if (formula.projdim != oracle.quotient_projdim() ||
        formula.depth != numvars - oracle.quotient_projdim()) {
      detail = "projective dimension or depth differs from the homology computation";
      return false;
    }
    return true;
  });

  run_check(out, "linear-resolution", [&](std::string& detail) {
    const GradedBetti oracle = betti_bruteforce(lgens, numvars, with_rational);
    for (const auto& [key, value] : oracle.ideal_table) {
      if (value == 0) continue;
      const auto& [i, d] = key;
      if (d != static_cast<unsigned>(ctx.n() + i)) {
        detail = "nonzero Betti number in homological index " + std::to_string(i) +
                 ", degree " + std::to_string(d);
        return false;
      }
    }
    return true;
  });

  run_check(out, "linear-quotients", [&](std::string& detail) {
    const QuotientsCheck check = verify_linear_quotients(lgens);
    if (!check.ok) {
      detail = "colon at position " + std::to_string(check.first_fail) +
               " is not generated by variables";
      return false;
    }
    for (std::size_t j = 1; j <= order.size(); ++j)
      if (!colon_sets_match(lgens, table, j, colon_set(ctx, order[j - 1]), detail))
        return false;
    return true;
  });

  run_check(out, "shelling", [&](std::string& detail) {
    if (!is_shelling(shelling_order(ctx))) {
      detail = "the admissible facet order fails the shelling condition";
      return false;
    }
    return true;
  });

  run_check(out, "regular-decomposition", [&](std::string& detail) {
    const RegularityReport report = check_regular(ctx);
    if (!report.regular) {
      for (const RegularityWitness& w : report.witnesses)
        if (!w.contained) {
          detail = "generator " + std::to_string(w.gen_rank) + " with " +
                   render(w.var) + " maps to generator " +
                   std::to_string(w.image_rank) + " outside its colon set";
          break;
        }
      return false;
    }
    return true;
  });

  run_check(out, "vertex-decomposition", [&](std::string& detail) {
    const VDCertificate cert = vd_certificate(ctx);
    const VerifyResult replay = verify_certificate(delta, cert);
    if (!replay.ok) {
      detail = replay.witness;
      return false;
    }
    try {
      if (!is_vertex_decomposable_bruteforce(delta)) {
        detail = "certificate verified but the brute-force recursion says no";
        return false;
      }
    } catch (const ScaleError&) {
      detail = "certificate verified; brute-force recursion skipped at this size";
    }
    return true;
  });

  run_check(out, "powers", [&](std::string& detail) {
    for (unsigned k = 1; k <= 3; ++k) {
      const std::vector<PowerGenerator> gens = power_generators(ctx, k);
      std::vector<Monomial> monomials;
      for (const PowerGenerator& g : gens) {
        if (g.degree() != static_cast<unsigned>(ctx.n()) * k) {
          detail = "power generator of wrong degree at k = " + std::to_string(k);
          return false;
        }
        monomials.push_back(g.polar_monomial(table));
      }
      for (std::size_t t = 1; t < gens.size(); ++t)
        if (!(gens[t - 1] < gens[t])) {
          detail = "power generators out of order at k = " + std::to_string(k);
          return false;
        }
      if (k == 1) {
        if (monomials != lgens) {
          detail = "k = 1 power generators differ from the dual generators";
          return false;
        }
      }
      unsigned max_colon = 0;
      for (const PowerGenerator& g : gens)
        max_colon = std::max(max_colon,
                             static_cast<unsigned>(power_colon_set(ctx, g).size()));
      if (max_colon != q_invariant(ctx, k)) {
        detail = "largest colon size differs from the q invariant at k = " +
                 std::to_string(k);
        return false;
      }
      if (gens.size() <= kMaxColonPositions) {
        const QuotientsCheck check = verify_linear_quotients(monomials);
        if (!check.ok) {
          detail = "power colon at position " + std::to_string(check.first_fail) +
                   " is not generated by variables (k = " + std::to_string(k) + ")";
          return false;
        }
        for (std::size_t j = 1; j <= gens.size(); ++j)
          if (!colon_sets_match(monomials, table, j,
                                power_colon_set(ctx, gens[j - 1]), detail))
            return false;
      }
    }
    return true;
  });

  run_check(out, "depth-stabilization", [&](std::string& detail) {
    const unsigned kmax = static_cast<unsigned>(ctx.n()) + 2;
    const DepthProfile profile = depth_profile(ctx, kmax);
    const int floor_depth = ctx.n() - 1;
    if (profile.stabilization_k == 0 ||
        profile.stabilization_k > static_cast<unsigned>(ctx.n())) {
      detail = "depth did not stabilize within n powers";
      return false;
    }
    if (profile.rows.back().depth != floor_depth) {
      detail = "stabilized depth is not n - 1";
      return false;
    }
    const BettiData formula = betti_formula(ctx);
    if (profile.rows.front().depth != formula.depth) {
      detail = "depth at k = 1 differs from the resolution formula";
      return false;
    }
    if (profile.rows.front().depth != depth_bruteforce(lgens, numvars)) {
      detail = "depth at k = 1 differs from the homology computation";
      return false;
    }
    return true;
  });

  run_check(out, "euler", [&](std::string& detail) {
    const long long actual = reduced_euler_characteristic(delta);
    const bool pure_powers_only = ctx.ideal.gens.size() == static_cast<std::size_t>(ctx.n());
    long long expected = 0;
    if (pure_powers_only) {
      const int e = static_cast<int>(ctx.total_levels()) - ctx.n() - 1;
      expected = e % 2 == 0 ? 1 : -1;
    }
    if (actual != expected) {
      detail = "reduced Euler characteristic is " + std::to_string(actual) +
               ", closed form says " + std::to_string(expected);
      return false;
    }
    if (table.size() <= 18) {  // subset scan is 2^vertices
      long long brute = 0;
      std::vector<std::uint64_t> facet_masks;
      for (const Face& f : delta.facets) facet_masks.push_back(table.mask(f));
      const std::uint64_t total = std::uint64_t{1} << table.size();
      for (std::uint64_t m = 0; m < total; ++m) {
        for (std::uint64_t fm : facet_masks)
          if ((m & fm) == m) {
            brute += std::popcount(m) % 2 == 1 ? 1 : -1;
            break;
          }
      }
      if (brute != actual) {
        detail = "reduced Euler characteristic differs from the subset scan";
        return false;
      }
    }
    return true;
  });

  return out;
}

}  // namespace polar
