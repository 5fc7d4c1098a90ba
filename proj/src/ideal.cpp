#include "polar/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.n == b.n && a.gens == b.gens;
}

bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

bool in_ideal(const MonomialIdeal& ideal, const Monomial& m) {
  return std::any_of(ideal.gens.begin(), ideal.gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimalize(std::vector<Monomial> gens, int n) {
  if (gens.empty()) throw ValidationError("empty ideal");
  for (const Monomial& g : gens) {
    if (static_cast<int>(g.nvars()) != n)
      throw ValidationError("generator arity does not match the variable count");
    if (g.is_unit()) throw ValidationError("unit ideal");
  }
  // A proper divisor has strictly smaller degree, so after a canonical
  // sort one forward scan finds the minimal generators (duplicates fall
  // out because equal monomials divide each other).
  std::sort(gens.begin(), gens.end(), canonical_less);
  MonomialIdeal out;
  out.n = n;
  for (const Monomial& g : gens)
    if (!in_ideal(out, g)) out.gens.push_back(g);
  return out;
}

MonomialIdeal whisker_from_complex(const std::vector<Monomial>& squarefree, int n) {
  std::vector<Monomial> gens;
  for (const Monomial& m : squarefree) {
    if (static_cast<int>(m.nvars()) != n)
      throw ValidationError("generator arity does not match the variable count");
    if (!m.is_squarefree())
      throw ValidationError("whisker construction requires squarefree generators");
    gens.push_back(m);
  }
  for (int i = 0; i < n; ++i) {
    Monomial sq(static_cast<std::size_t>(n));
    sq.exp[static_cast<std::size_t>(i)] = 2;
    gens.push_back(sq);
  }
  return minimalize(std::move(gens), n);
}

MonomialIdeal random_artinian(int n, unsigned bmax, int extra, std::uint64_t seed) {
  if (n < 1) throw ValidationError("need at least one variable");
  if (bmax < 1) throw ValidationError("bmax must be positive");
  if (extra < 0) throw ValidationError("extra generator count must be non-negative");
  // mt19937_64 with plain modulo reduction: bit-identical streams on
  // every platform, which the golden tests rely on.
  std::mt19937_64 rng(seed);
  std::vector<unsigned> b(static_cast<std::size_t>(n));
  for (auto& bi : b) bi = 1 + static_cast<unsigned>(rng() % bmax);

  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    Monomial p(static_cast<std::size_t>(n));
    p.exp[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)];
    gens.push_back(p);
  }
  bool box_has_room = std::any_of(b.begin(), b.end(), [](unsigned bi) { return bi > 1; });
  for (int t = 0; t < extra && box_has_room; ++t) {
    Monomial m(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.exp.size(); ++i)
      m.exp[i] = static_cast<unsigned>(rng() % b[i]);
    if (m.is_unit()) {
      // Nudge the draw off the unit deterministically.
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] > 1) {
          m.exp[i] = 1;
          break;
        }
    }
    gens.push_back(m);
  }
  return minimalize(std::move(gens), n);
}

MonomialIdeal parse_ideal(std::istream& in, const std::string& source_name) {
  auto fail = [&](int line, const std::string& msg) -> void {
    throw ValidationError(source_name + ":" + std::to_string(line) + ": " + msg);
  };

  int n = -1;
  std::vector<Monomial> gens;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;  // blank or comment-only line
    if (head == "n") {
      if (n >= 0) fail(lineno, "duplicate 'n' line");
      long long v = 0;
      if (!(ls >> v) || v < 1) fail(lineno, "expected a positive variable count");
      if (v > 1024) fail(lineno, "variable count too large");
      std::string rest;
      if (ls >> rest) fail(lineno, "trailing tokens after variable count");
      n = static_cast<int>(v);
    } else if (head == "gen") {
      if (n < 0) fail(lineno, "'gen' before 'n'");
      Monomial m(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        long long e = 0;
        if (!(ls >> e)) fail(lineno, "expected " + std::to_string(n) + " exponents");
        if (e < 0) fail(lineno, "negative exponent");
        if (e > 1000000) fail(lineno, "exponent too large");
        m.exp[static_cast<std::size_t>(i)] = static_cast<unsigned>(e);
      }
      std::string rest;
      if (ls >> rest) fail(lineno, "trailing tokens after exponents");
      gens.push_back(std::move(m));
    } else {
      fail(lineno, "unrecognized directive '" + head + "'");
    }
  }
  if (n < 0) throw ValidationError(source_name + ": missing 'n' line");
  return minimalize(std::move(gens), n);
}

MonomialIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  return parse_ideal(in, path);
}

std::string print_ideal(const MonomialIdeal& ideal) {
  std::string out = "n " + std::to_string(ideal.n) + "\n";
  for (const Monomial& g : ideal.gens) {
    out += "gen";
    for (unsigned e : g.exp) {
      out += ' ';
      out += std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

}  // namespace polar
