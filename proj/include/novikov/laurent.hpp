#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "novikov/domain.hpp"

namespace novikov {

// Element of the free abelian group Gamma = Z^r, written additively.
using Exponent = std::vector<std::int64_t>;

// Lexicographic comparison; both vectors must have equal length.
int exponent_compare(const Exponent& a, const Exponent& b);
// Componentwise sum/difference with overflow checking.
Exponent exponent_add(const Exponent& a, const Exponent& b);
Exponent exponent_sub(const Exponent& a, const Exponent& b);

// A character Gamma -> R with rational values, i.e. a vector in Q^r.
struct Character {
  std::vector<mpq_class> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool operator==(const Character& other) const { return coords == other.coords; }
};

// Exact value of xi on a group element: the dot product xi . e.
mpq_class pairing(const Character& xi, const Exponent& e);

// An element of the group ring S[Gamma] = S[t_1^{\pm 1},...,t_r^{\pm 1}]:
// finitely many terms c * t^e with c in S nonzero and e in Z^r, kept sorted
// by exponent in ascending lexicographic order.
class LaurentPoly {
public:
  struct Term {
    Exponent exp;
    mpq_class coeff;
    bool operator==(const Term& other) const {
      return exp == other.exp && coeff == other.coeff;
    }
  };

  LaurentPoly(Domain domain, int rank);  // the zero element
  static LaurentPoly zero(Domain domain, int rank);
  static LaurentPoly constant(Domain domain, int rank, const mpq_class& c);
  static LaurentPoly monomial(Domain domain, int rank, Exponent e,
                              const mpq_class& c);
  static LaurentPoly from_terms(
      Domain domain, int rank,
      const std::vector<std::pair<Exponent, mpq_class>>& raw);

  const Domain& domain() const { return domain_; }
  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& other) const;
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

private:
  Domain domain_;
  int rank_;
  std::vector<Term> terms_;
};

// Exact quotient p/q in S[Gamma].  Throws domain_error when q is zero or
// does not divide p; the search space for quotient exponents is bounded by
// the componentwise Newton box of p and q, which also guarantees
// termination in the Laurent setting where exponents are unbounded below.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

// max of xi over the support of p.  Throws domain_error for p == 0.
mpq_class leading_value(const LaurentPoly& p, const Character& xi);

// Sum of the terms of p attaining leading_value(p, xi).
LaurentPoly leading_part(const LaurentPoly& p, const Character& xi);

// Whether p becomes a unit in the rational Novikov ring of xi: the
// xi-leading part must be a single term with unit coefficient.
bool in_novikov_units(const LaurentPoly& p, const Character& xi);

// Debug rendering, e.g. "2 x1^3 x2^-1 + 1".
std::string to_string(const LaurentPoly& p);
std::string to_string(const Character& xi);

}  // namespace novikov
