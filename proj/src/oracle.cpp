#include "polar/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "polar/errors.hpp"

namespace polar {

namespace {

// Local divisibility-minimal pruning; deliberately not the library
// routine, so the two sides of every comparison stay independent.
std::vector<Monomial> prune_to_minimal(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && !(gens[j] == gens[i] && j > i)) keep = false;
    }
    if (keep) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool divisible_by_some(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const Monomial& g : gens)
    if (g.divides(m)) return true;
  return false;
}

long long mulmod(long long a, long long b, long long p) { return (a * b) % p; }

long long powmod(long long base, long long e, long long p) {
  long long r = 1;
  base %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

// Rank by Gaussian elimination over the prime field F_p.  Entries arrive
// as +1/-1/0 and p < 2^31, so products fit in 64 bits.
std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const long long inv = powmod(((m[rank][c] % p) + p) % p, p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const long long factor = mulmod(((m[r][c] % p) + p) % p, inv, p);
      if (factor == 0) continue;
      for (std::size_t cc = c; cc < cols; ++cc) {
        m[r][cc] = ((m[r][cc] - mulmod(factor, m[rank][cc], p)) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// Exact fractions on 64-bit parts; any overflow aborts the run rather
// than returning a wrong rank.
struct Frac {
  long long num = 0;
  long long den = 1;
};

long long checked_ll(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw ScaleError(std::string("exact arithmetic overflow in ") + what);
  return static_cast<long long>(v);
}

Frac normalize(__int128 num, __int128 den, const char* what) {
  if (den == 0) throw ScaleError("exact arithmetic division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Frac{checked_ll(num / a, what), checked_ll(den / a, what)};
}

Frac sub(const Frac& x, const Frac& y) {
  return normalize(static_cast<__int128>(x.num) * y.den -
                       static_cast<__int128>(y.num) * x.den,
                   static_cast<__int128>(x.den) * y.den, "subtraction");
}

Frac mul(const Frac& x, const Frac& y) {
  return normalize(static_cast<__int128>(x.num) * y.num,
                   static_cast<__int128>(x.den) * y.den, "multiplication");
}

Frac div(const Frac& x, const Frac& y) {
  return normalize(static_cast<__int128>(x.num) * y.den,
                   static_cast<__int128>(x.den) * y.num, "division");
}

std::size_t rank_rational(std::vector<std::vector<Frac>> m) {
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].num == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].num == 0) continue;
      const Frac factor = div(m[r][c], m[rank][c]);
      for (std::size_t cc = c; cc < cols; ++cc)
        m[r][cc] = sub(m[r][cc], mul(factor, m[rank][cc]));
    }
    ++rank;
  }
  return rank;
}

// Signed incidence entries of the boundary map from cardinality-c faces
// to cardinality-(c-1) faces, as position -> value lists per column.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

BoundaryMatrix boundary_matrix(const std::vector<unsigned>& prev,
                               const std::vector<unsigned>& cur) {
  BoundaryMatrix bm;
  bm.rows = prev.size();
  std::map<unsigned, std::size_t> row_of;
  for (std::size_t i = 0; i < prev.size(); ++i) row_of[prev[i]] = i;
  bm.columns.resize(cur.size());
  for (std::size_t j = 0; j < cur.size(); ++j) {
    unsigned mask = cur[j];
    int position = 0;
    for (unsigned rest = mask; rest != 0; ++position) {
      const unsigned bit = rest & (~rest + 1u);
      rest ^= bit;
      bm.columns[j].push_back({row_of.at(mask ^ bit), position % 2 == 0 ? 1 : -1});
    }
  }
  return bm;
}

std::size_t boundary_rank_mod_p(const BoundaryMatrix& bm, long long p) {
  std::vector<std::vector<long long>> dense(
      bm.rows, std::vector<long long>(bm.columns.size(), 0));
  for (std::size_t j = 0; j < bm.columns.size(); ++j)
    for (const auto& [r, v] : bm.columns[j]) dense[r][j] = v == 1 ? 1 : p - 1;
  return rank_mod_p(std::move(dense), p);
}

std::size_t boundary_rank_rational(const BoundaryMatrix& bm) {
  std::vector<std::vector<Frac>> dense(bm.rows,
                                       std::vector<Frac>(bm.columns.size()));
  for (std::size_t j = 0; j < bm.columns.size(); ++j)
    for (const auto& [r, v] : bm.columns[j]) dense[r][j] = Frac{v, 1};
  return rank_rational(std::move(dense));
}

std::string render_multidegree(const std::vector<unsigned>& alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(alpha[i]);
  }
  return s + ")";
}

Face intersect(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Face> facets_bruteforce(const std::vector<Face>& generator_faces,
                                    const Face& vertices) {
  if (vertices.size() > kMaxBruteVertices)
    throw ScaleError("brute-force facet enumeration is limited to " +
                     std::to_string(kMaxBruteVertices) + " vertices");
  const unsigned v = static_cast<unsigned>(vertices.size());
  auto bit_of = [&](PolarVar w) -> unsigned {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || !(*it == w))
      throw ValidationError("generator face uses an unknown vertex " + render(w));
    return static_cast<unsigned>(it - vertices.begin());
  };
  std::vector<std::uint32_t> gen_masks;
  for (const Face& g : generator_faces) {
    std::uint32_t m = 0;
    for (PolarVar w : g) m |= std::uint32_t{1} << bit_of(w);
    gen_masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << v;
  std::vector<char> independent(total, 0);
  for (std::uint64_t m = 0; m < total; ++m) {
    bool ok = true;
    for (std::uint32_t g : gen_masks)
      if ((m & g) == g) {
        ok = false;
        break;
      }
    independent[m] = ok ? 1 : 0;
  }
  std::vector<Face> out;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (!independent[m]) continue;
    bool maximal = true;
    for (unsigned i = 0; i < v && maximal; ++i)
      if (!(m >> i & 1) && independent[m | (std::uint64_t{1} << i)]) maximal = false;
    if (!maximal) continue;
    Face f;
    for (unsigned i = 0; i < v; ++i)
      if (m >> i & 1) f.push_back(vertices[i]);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> GradedBetti::quotient_totals() const {
  int maxi = -1;
  for (const auto& [key, value] : ideal_table)
    if (value > 0) maxi = std::max(maxi, key.first);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(maxi + 2), 0);
  out[0] = 1;
  for (const auto& [key, value] : ideal_table)
    out[static_cast<std::size_t>(key.first) + 1] += value;
  return out;
}

int GradedBetti::quotient_projdim() const {
  return static_cast<int>(quotient_totals().size()) - 1;
}

GradedBetti betti_bruteforce(std::vector<Monomial> gens, int numvars,
                             bool with_rational) {
  if (numvars > kMaxOracleVariables)
    throw ScaleError("homology computation is limited to " +
                     std::to_string(kMaxOracleVariables) + " variables");
  for (const Monomial& g : gens)
    if (g.nvars() != static_cast<std::size_t>(numvars))
      throw ValidationError("generator arity does not match the variable count");
  gens = prune_to_minimal(std::move(gens));
  if (gens.size() > kMaxOracleGenerators)
    throw ScaleError("homology computation is limited to " +
                     std::to_string(kMaxOracleGenerators) + " generators");

  GradedBetti result;
  if (gens.empty()) return result;

  // Multidegrees where Betti numbers can live: lcms of generator subsets.
  std::set<std::vector<unsigned>> lattice;
  std::vector<std::vector<unsigned>> work;
  for (const Monomial& g : gens)
    if (lattice.insert(g.exp).second) work.push_back(g.exp);
  while (!work.empty()) {
    const std::vector<unsigned> alpha = std::move(work.back());
    work.pop_back();
    for (const Monomial& g : gens) {
      std::vector<unsigned> up(alpha.size());
      for (std::size_t i = 0; i < alpha.size(); ++i)
        up[i] = std::max(alpha[i], g.exp[i]);
      if (lattice.insert(up).second) {
        if (lattice.size() > kMaxLcmLattice)
          throw ScaleError("lcm lattice exceeds " + std::to_string(kMaxLcmLattice) +
                           " multidegrees");
        work.push_back(std::move(up));
      }
    }
  }

  for (const std::vector<unsigned>& alpha : lattice) {
    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] > 0) supp.push_back(i);
    const std::size_t s = supp.size();
    if (s > static_cast<std::size_t>(kMaxKoszulSupport))
      throw ScaleError("multidegree support exceeds " +
                       std::to_string(kMaxKoszulSupport) + " variables");

    // K^alpha: squarefree tau below alpha with x^(alpha - tau) in the ideal.
    std::vector<std::vector<unsigned>> faces_by_card(s + 1);
    Monomial rest(static_cast<std::size_t>(numvars));
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      rest.exp.assign(alpha.begin(), alpha.end());
      for (std::size_t t = 0; t < s; ++t)
        if (mask >> t & 1) --rest.exp[supp[t]];
      if (divisible_by_some(gens, rest))
        faces_by_card[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    for (auto& level : faces_by_card) std::sort(level.begin(), level.end());

    // r[c] = rank of the boundary map out of cardinality-c faces.
    std::vector<std::size_t> r(s + 2, 0);
    for (std::size_t c = 1; c <= s; ++c) {
      if (faces_by_card[c].empty()) continue;
      const BoundaryMatrix bm = boundary_matrix(faces_by_card[c - 1], faces_by_card[c]);
      const std::size_t r2 = boundary_rank_mod_p(bm, 2);
      const std::size_t rp = boundary_rank_mod_p(bm, 2147483647LL);
      if (r2 != rp)
        throw OracleError("field ranks disagree at multidegree " +
                          render_multidegree(alpha));
      if (with_rational && boundary_rank_rational(bm) != rp)
        throw OracleError("rational rank disagrees at multidegree " +
                          render_multidegree(alpha));
      r[c] = rp;
    }

    const unsigned degree = std::accumulate(alpha.begin(), alpha.end(), 0u);
    for (std::size_t c = 0; c <= s; ++c) {
      const long long beta = static_cast<long long>(faces_by_card[c].size()) -
                             static_cast<long long>(r[c]) -
                             static_cast<long long>(r[c + 1]);
      if (beta < 0)
        throw OracleError("negative homology rank at multidegree " +
                          render_multidegree(alpha));
      if (beta > 0)
        result.ideal_table[{static_cast<int>(c), degree}] +=
            static_cast<std::uint64_t>(beta);
    }
  }
  return result;
}

int depth_bruteforce(const std::vector<Monomial>& gens, int numvars) {
  return numvars - betti_bruteforce(gens, numvars).quotient_projdim();
}

bool is_shelling(const std::vector<Face>& ordered_facets) {
  const std::size_t m = ordered_facets.size();
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Face meet_i = intersect(ordered_facets[j], ordered_facets[i]);
      bool found = false;
      for (std::size_t l = 0; l < j && !found; ++l) {
        if (face_minus(ordered_facets[j], ordered_facets[l]).size() != 1) continue;
        const Face meet_l = intersect(ordered_facets[j], ordered_facets[l]);
        found = face_subset(meet_i, meet_l);
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<Monomial> minimal_colon_generators(const std::vector<Monomial>& ordered_gens,
                                               std::size_t j) {
  if (j == 0 || j > ordered_gens.size())
    throw ValidationError("colon position out of range");
  std::vector<Monomial> candidates;
  for (std::size_t t = 0; t + 1 < j; ++t)
    candidates.push_back(ordered_gens[t].colon(ordered_gens[j - 1]));
  return prune_to_minimal(std::move(candidates));
}

QuotientsCheck verify_linear_quotients(const std::vector<Monomial>& ordered_gens) {
  for (std::size_t j = 2; j <= ordered_gens.size(); ++j) {
    for (const Monomial& c : minimal_colon_generators(ordered_gens, j))
      if (c.degree() != 1) return QuotientsCheck{false, static_cast<int>(j)};
  }
  return QuotientsCheck{true, 0};
}

namespace {

std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : masks) {
    bool dominated = false;
    for (std::uint64_t other : masks)
      if (other != m && (m & other) == m) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

bool vd_masks(const std::vector<std::uint64_t>& facets, unsigned width,
              std::map<std::vector<std::uint64_t>, bool>& memo) {
  const auto it = memo.find(facets);
  if (it != memo.end()) return it->second;
  bool answer = false;
  if (facets.size() == 1) {
    answer = true;
  } else {
    std::uint64_t support = 0;
    for (std::uint64_t m : facets) support |= m;
    for (unsigned v = 0; v < width && !answer; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(support & bit)) continue;
      std::vector<std::uint64_t> del, lnk;
      for (std::uint64_t m : facets) {
        del.push_back(m & ~bit);
        if (m & bit) lnk.push_back(m & ~bit);
      }
      del = maximal_masks(std::move(del));
      lnk = maximal_masks(std::move(lnk));
      bool shedding = true;
      for (std::uint64_t m : del)
        if (!std::binary_search(facets.begin(), facets.end(), m)) {
          shedding = false;
          break;
        }
      answer = shedding && vd_masks(del, width, memo) && vd_masks(lnk, width, memo);
    }
  }
  memo[facets] = answer;
  return answer;
}

}  // namespace

bool is_vertex_decomposable_bruteforce(const SimplicialComplex& cplx) {
  Face support;
  for (const Face& f : cplx.facets) support = face_union(support, f);
  if (support.size() > kMaxVdVertices)
    throw ScaleError("brute-force decomposability is limited to " +
                     std::to_string(kMaxVdVertices) + " vertices");
  if (cplx.facets.empty()) return false;
  std::vector<std::uint64_t> masks;
  for (const Face& f : cplx.facets) {
    std::uint64_t m = 0;
    for (PolarVar v : f) {
      const auto pos = std::lower_bound(support.begin(), support.end(), v);
      m |= std::uint64_t{1} << static_cast<unsigned>(pos - support.begin());
    }
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::map<std::vector<std::uint64_t>, bool> memo;
  return vd_masks(masks, static_cast<unsigned>(support.size()), memo);
}

}  // namespace polar
