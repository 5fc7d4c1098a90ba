#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "polar/complex.hpp"
#include "polar/context.hpp"
#include "polar/errors.hpp"
#include "polar/ideal.hpp"
#include "polar/oracle.hpp"
#include "polar/resolution.hpp"

using namespace polar;

namespace {

ArtinianContext ctx_of(int n, std::vector<Monomial> gens) {
  return build_context(minimalize(std::move(gens), n));
}

Face face_of(std::initializer_list<std::pair<int, int>> vars) {
  Face f;
  for (auto [v, l] : vars) f.push_back(PolarVar{v, l});
  std::sort(f.begin(), f.end());
  return f;
}

const ArtinianContext kSquares = ctx_of(2, {Monomial{2, 0}, Monomial{0, 2}});
const ArtinianContext kMixed =
    ctx_of(2, {Monomial{3, 0}, Monomial{0, 3}, Monomial{1, 1}});

}  // namespace

TEST_CASE("admissible order sorts sources by plain lex") {
  const std::vector<LGenerator> order = admissible_order(kMixed);
  REQUIRE(order.size() == 5);
  CHECK(order[0].source == Monomial(2));
  CHECK(order[1].source == Monomial{0, 1});
  CHECK(order[2].source == Monomial{0, 2});
  CHECK(order[3].source == Monomial{1, 0});
  CHECK(order[4].source == Monomial{2, 0});
  for (int r = 0; r < 5; ++r) CHECK(order[static_cast<std::size_t>(r)].rank == r + 1);

  CHECK(order[0].face == face_of({{1, 1}, {2, 1}}));
  CHECK(order[2].face == face_of({{1, 1}, {2, 3}}));
  CHECK(order[4].face == face_of({{1, 3}, {2, 1}}));
}

TEST_CASE("colon sets list the levels below each exponent") {
  const std::vector<LGenerator> order = admissible_order(kMixed);
  CHECK(colon_set(kMixed, order[0]).empty());
  CHECK(colon_set(kMixed, order[1]) == face_of({{2, 1}}));
  CHECK(colon_set(kMixed, order[2]) == face_of({{2, 1}, {2, 2}}));
  CHECK(colon_set(kMixed, order[3]) == face_of({{1, 1}}));
  CHECK(colon_set(kMixed, order[4]) == face_of({{1, 1}, {1, 2}}));
  for (const LGenerator& g : order)
    CHECK(colon_set(kMixed, g).size() == g.source.degree());
}

TEST_CASE("decomposition function picks the earliest covering generator") {
  const std::vector<LGenerator> order = admissible_order(kMixed);
  // the whole vertex set contains phi(1) first of all.
  CHECK(decomposition_function(order, face_of({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2},
                                               {2, 3}}))
            .rank == 1);
  // phi(x^2) plus its colon variable x1_1: the earliest cover is phi(1)?
  // no - {x1_1, x1_3, x2_1} contains phi(1) = {x1_1, x2_1}.
  CHECK(decomposition_function(order, face_of({{1, 1}, {1, 3}, {2, 1}})).rank == 1);
  // a face containing only phi(y^2).
  CHECK(decomposition_function(order, face_of({{1, 1}, {2, 3}})).rank == 3);

  CHECK_THROWS_WITH_AS(decomposition_function(order, face_of({{1, 2}, {2, 2}})),
                       "face x1_2 x2_2 contains no generator face", ValidationError);

  // closed form: face(g) + colon variable x_{i,j} lands on the generator
  // whose source exponent i is replaced by j - 1.
  for (const LGenerator& g : order) {
    for (PolarVar v : colon_set(kMixed, g)) {
      const LGenerator img = decomposition_function(kMixed, face_union(g.face, {v}));
      Monomial expected = g.source;
      expected.exp[static_cast<std::size_t>(v.var - 1)] =
          static_cast<unsigned>(v.level) - 1;
      CHECK(img.source == expected);
      CHECK(img.rank < g.rank);
    }
  }
}

TEST_CASE("the decomposition function is regular") {
  const RegularityReport report = check_regular(kMixed);
  CHECK(report.regular);
  // one witness for every (generator, colon variable) pair.
  REQUIRE(report.witnesses.size() == 6);
  for (const RegularityWitness& w : report.witnesses) {
    CHECK(w.contained);
    CHECK(w.image_rank < w.gen_rank);
  }
  // spot-check: generator 3 (y^2) with x2_2 maps to generator 2 (y).
  const RegularityWitness& w = report.witnesses[2];
  CHECK(w.gen_rank == 3);
  CHECK(w.var == PolarVar{2, 2});
  CHECK(w.image_rank == 2);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const ArtinianContext ctx = build_context(
        random_artinian(1 + static_cast<int>(seed % 3), 4, static_cast<int>(seed % 4),
                        seed));
    CHECK(check_regular(ctx).regular);
  }
}

TEST_CASE("betti numbers from the h-vector") {
  const BettiData squares = betti_formula(kSquares);
  CHECK(squares.betti == std::vector<std::uint64_t>{1, 4, 4, 1});
  CHECK(squares.projdim == 3);
  CHECK(squares.depth == 1);

  const BettiData mixed = betti_formula(kMixed);
  CHECK(mixed.betti == std::vector<std::uint64_t>{1, 5, 6, 2});
  CHECK(mixed.projdim == 3);
  CHECK(mixed.depth == 3);

  const BettiData frozen = betti_formula(build_context(random_artinian(3, 3, 4, 127)));
  CHECK(frozen.betti == std::vector<std::uint64_t>{1, 10, 17, 10, 2});
  CHECK(frozen.projdim == 4);
  CHECK(frozen.depth == 4);

  // betti[1] counts the generators; the alternating sum collapses to 0
  // against the leading 1 (the resolved module has rank 0 plus the ring).
  for (std::uint64_t seed = 31; seed <= 50; ++seed) {
    const ArtinianContext ctx = build_context(random_artinian(2, 5, 2, seed));
    const BettiData data = betti_formula(ctx);
    CHECK(data.betti[1] == ctx.length());
    long long alternating = 0;
    for (std::size_t i = 0; i < data.betti.size(); ++i)
      alternating += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(data.betti[i]);
    CHECK(alternating == 0);
    CHECK(data.projdim == static_cast<int>(ctx.max_standard_degree()) + 1);
    CHECK(data.depth + data.projdim == static_cast<int>(ctx.total_levels()));
  }
}

TEST_CASE("the admissible facet order is a shelling") {
  const std::vector<Face> order = shelling_order(kSquares);
  REQUIRE(order.size() == 4);
  // complements of the phi faces, in admissible order.
  CHECK(order[0] == face_of({{1, 2}, {2, 2}}));
  CHECK(order[1] == face_of({{1, 2}, {2, 1}}));
  CHECK(order[2] == face_of({{1, 1}, {2, 2}}));
  CHECK(order[3] == face_of({{1, 1}, {2, 1}}));
  CHECK(is_shelling(order));

  // front-loading two opposite edges of the 4-cycle breaks the condition.
  const std::vector<Face> bad = {order[0], order[3], order[1], order[2]};
  CHECK_FALSE(is_shelling(bad));

  for (std::uint64_t seed = 51; seed <= 80; ++seed) {
    const ArtinianContext ctx = build_context(
        random_artinian(1 + static_cast<int>(seed % 3), 4, static_cast<int>(seed % 3),
                        seed));
    CHECK(is_shelling(shelling_order(ctx)));
  }
}
