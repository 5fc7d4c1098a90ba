#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace polar {

// A monomial in a fixed number of variables, stored as its exponent
// vector.  The number of variables is implicit in exp.size(); all
// operations require operands of equal arity.
struct Monomial {
  std::vector<unsigned> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> e) : exp(e) {}

  std::size_t nvars() const { return exp.size(); }
  unsigned degree() const;
  bool is_unit() const { return degree() == 0; }
  bool is_squarefree() const;
  bool divides(const Monomial& m) const;

  Monomial times(const Monomial& m) const;
  // this : m, i.e. this / gcd(this, m).
  Monomial colon(const Monomial& m) const;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

bool operator==(const Monomial& a, const Monomial& b);
bool operator!=(const Monomial& a, const Monomial& b);

// (total degree, then lexicographic on exponent vectors): the order used
// for every printed generator and standard-monomial listing.
bool canonical_less(const Monomial& a, const Monomial& b);

// Plain lexicographic comparison of exponent vectors.
bool lex_less(const Monomial& a, const Monomial& b);

// "1", "x2", "x1^2*x3", ...
std::string render(const Monomial& m);

}  // namespace polar
