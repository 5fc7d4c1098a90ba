#include "polar/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "polar/errors.hpp"

namespace polar {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw ValidationError("monomial arity mismatch");
}

}  // namespace

unsigned Monomial::degree() const {
  return std::accumulate(exp.begin(), exp.end(), 0u);
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp.begin(), exp.end(), [](unsigned e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
  require_same_arity(*this, m);
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > m.exp[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  require_same_arity(*this, m);
  Monomial r(*this);
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
  return r;
}

Monomial Monomial::colon(const Monomial& m) const {
  require_same_arity(*this, m);
  Monomial r(nvars());
  for (std::size_t i = 0; i < exp.size(); ++i)
    r.exp[i] = exp[i] > m.exp[i] ? exp[i] - m.exp[i] : 0;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < r.exp.size(); ++i)
    r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < r.exp.size(); ++i)
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

bool canonical_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

bool lex_less(const Monomial& a, const Monomial& b) { return a.exp < b.exp; }

std::string render(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m.exp[i] > 1) {
      out += '^';
      out += std::to_string(m.exp[i]);
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace polar
