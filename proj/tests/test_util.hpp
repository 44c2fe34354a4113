#pragma once

// Shared randomized-input generators and independent oracles for the test
// suites.  The oracles deliberately avoid the library's own algorithms:
// products are accumulated by brute-force convolution, membership questions
// are answered by direct evaluation, determinants by cofactor expansion.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "novikov/complex.hpp"
#include "novikov/cones.hpp"
#include "novikov/domain.hpp"
#include "novikov/laurent.hpp"
#include "novikov/matrix.hpp"

namespace testutil {

using novikov::Character;
using novikov::Domain;
using novikov::Exponent;
using novikov::LaurentPoly;

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Domain random_domain(Rng& rng) {
  switch (rand_long(rng, 0, 2)) {
    case 0: return Domain::integers();
    case 1: return Domain::rationals();
    default: return Domain::prime_field(rand_long(rng, 0, 1) ? 2 : 5);
  }
}

inline mpq_class random_element(Rng& rng, const Domain& d, long bound = 5) {
  long num = rand_long(rng, -bound, bound);
  if (d.tag() == novikov::DomainTag::Rationals && rand_long(rng, 0, 2) == 0) {
    long den = rand_long(rng, 1, bound);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  return d.canonical(mpq_class(num));
}

inline Exponent random_exponent(Rng& rng, int rank, long lo = -3, long hi = 3) {
  Exponent e(rank);
  for (int i = 0; i < rank; ++i) e[i] = rand_long(rng, lo, hi);
  return e;
}

inline LaurentPoly random_poly(Rng& rng, const Domain& d, int rank,
                               int max_terms = 4, long coeff_bound = 5,
                               long exp_bound = 3) {
  std::vector<std::pair<Exponent, mpq_class>> raw;
  long n = rand_long(rng, 0, max_terms);
  for (long i = 0; i < n; ++i)
    raw.emplace_back(random_exponent(rng, rank, -exp_bound, exp_bound),
                     random_element(rng, d, coeff_bound));
  return LaurentPoly::from_terms(d, rank, raw);
}

inline LaurentPoly random_nonzero_poly(Rng& rng, const Domain& d, int rank,
                                       int max_terms = 4) {
  for (;;) {
    LaurentPoly p = random_poly(rng, d, rank, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline Character random_character(Rng& rng, int rank, long bound = 6) {
  Character xi;
  xi.coords.resize(rank);
  for (int i = 0; i < rank; ++i) {
    long num = rand_long(rng, -bound, bound);
    long den = rand_long(rng, 1, 4);
    mpq_class q(num, den);
    q.canonicalize();
    xi.coords[i] = q;
  }
  return xi;
}

inline Character lattice_character(const std::vector<long>& v) {
  Character xi;
  for (long c : v) xi.coords.emplace_back(c);
  return xi;
}

inline novikov::PolyMatrix random_matrix(Rng& rng, const Domain& d, int rank,
                                         int rows, int cols,
                                         int max_terms = 2,
                                         long exp_bound = 2) {
  novikov::PolyMatrix m(d, rank, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.set(i, j, random_poly(rng, d, rank, max_terms, 3, exp_bound));
  return m;
}

inline novikov::HalfSpace random_halfspace(Rng& rng, int rank, long bound = 3) {
  std::vector<mpz_class> f(rank);
  for (int i = 0; i < rank; ++i) f[i] = rand_long(rng, -bound, bound);
  return novikov::HalfSpace(std::move(f), rand_long(rng, 0, 1) == 0);
}

inline novikov::IntegralCone random_cone(Rng& rng, int rank,
                                         int max_constraints = 3) {
  std::vector<novikov::HalfSpace> hs;
  long n = rand_long(rng, 0, max_constraints);
  for (long i = 0; i < n; ++i) hs.push_back(random_halfspace(rng, rank));
  return novikov::IntegralCone(rank, std::move(hs));
}

inline novikov::IntegralSubset random_subset(Rng& rng, int rank,
                                             int max_cones = 3) {
  std::vector<novikov::IntegralCone> cones;
  long n = rand_long(rng, 0, max_cones);
  for (long i = 0; i < n; ++i) cones.push_back(random_cone(rng, rank));
  return novikov::IntegralSubset(rank, std::move(cones));
}

// A unit of S[Gamma]: (unit of S) * t^e.
inline LaurentPoly random_unit_monomial(Rng& rng, const Domain& d, int rank) {
  mpq_class c;
  if (d.tag() == novikov::DomainTag::Integers)
    c = rand_long(rng, 0, 1) ? 1 : -1;
  else
    for (c = 0; d.is_zero(c);) c = d.canonical(mpq_class(rand_long(rng, -4, 4)));
  return LaurentPoly::monomial(d, rank, random_exponent(rng, rank, -1, 1), c);
}

// A random chain complex that is valid by construction.  Seed complexes are
// direct sums of freely chosen generators and of two-term pieces
// (one boundary entry between fresh basis elements), which compose to zero
// trivially; they are then stirred with paired elementary operations
// (basis swaps, transvections, unit rescalings) that preserve the complex
// property exactly.  Entries are kept to at most `max_entry_terms` terms by
// retrying with fewer stir operations.
inline novikov::BasedChainComplex random_valid_complex(
    Rng& rng, const Domain& d, int gamma_rank, int max_top_degree = 3,
    int max_dim = 3, int max_entry_terms = 4, bool favor_acyclic = false,
    long coeff_bound = 3) {
  using novikov::BasedChainComplex;
  using novikov::PolyMatrix;

  const int m = static_cast<int>(rand_long(rng, 1, max_top_degree));

  auto build_seed = [&]() {
    BasedChainComplex c;
    c.domain = d;
    c.gamma_rank = gamma_rank;
    c.dims.assign(m + 1, 0);
    std::vector<std::tuple<int, int, int, LaurentPoly>> placed;
    long pieces = rand_long(rng, 1, 2 * m + 2);
    for (long p = 0; p < pieces; ++p) {
      int deg = static_cast<int>(
          rand_long(rng, 0, favor_acyclic ? m - 1 : m));
      bool paired = favor_acyclic || (deg < m && rand_long(rng, 0, 9) < 7);
      if (paired) {
        if (c.dims[deg] >= max_dim || c.dims[deg + 1] >= max_dim) continue;
        int row = c.dims[deg + 1]++;
        int col = c.dims[deg]++;
        LaurentPoly entry = random_poly(rng, d, gamma_rank, 2, coeff_bound, 2);
        if (favor_acyclic)
          entry = random_unit_monomial(rng, d, gamma_rank) +
                  random_poly(rng, d, gamma_rank, 1, coeff_bound, 2);
        placed.emplace_back(deg, row, col, std::move(entry));
      } else {
        if (c.dims[deg] >= max_dim) continue;
        c.dims[deg]++;
      }
    }
    if (favor_acyclic && c.dims[0] == 0) {
      // Guarantee at least one piece survived the dimension caps.
      c.dims[1]++;
      c.dims[0]++;
      placed.emplace_back(0, c.dims[1] - 1, c.dims[0] - 1,
                          random_unit_monomial(rng, d, gamma_rank));
    }
    for (int i = 0; i < m; ++i)
      c.boundaries.emplace_back(d, gamma_rank, c.dims[i + 1], c.dims[i]);
    for (auto& [deg, row, col, poly] : placed)
      c.boundaries[deg].set(row, col, std::move(poly));
    return c;
  };

  auto max_terms = [](const BasedChainComplex& c) {
    std::size_t most = 0;
    for (const auto& b : c.boundaries)
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
          most = std::max(most, b.at(i, j).term_count());
    return most;
  };

  // Change of basis at degree k: boundaries[k] transforms on columns,
  // boundaries[k-1] inversely on rows.
  auto stir = [&](BasedChainComplex& c, int ops) {
    for (int op = 0; op < ops; ++op) {
      int k = static_cast<int>(rand_long(rng, 0, m));
      if (c.dims[k] == 0) continue;
      int a = static_cast<int>(rand_long(rng, 0, c.dims[k] - 1));
      int b = static_cast<int>(rand_long(rng, 0, c.dims[k] - 1));
      switch (rand_long(rng, 0, 2)) {
        case 0: {  // swap basis elements a and b
          if (a == b) break;
          if (k < m) {
            PolyMatrix& bd = c.boundaries[k];
            for (int i = 0; i < bd.rows(); ++i) {
              LaurentPoly tmp = bd.at(i, a);
              bd.set(i, a, bd.at(i, b));
              bd.set(i, b, std::move(tmp));
            }
          }
          if (k >= 1) {
            PolyMatrix& bd = c.boundaries[k - 1];
            for (int j = 0; j < bd.cols(); ++j) {
              LaurentPoly tmp = bd.at(a, j);
              bd.set(a, j, bd.at(b, j));
              bd.set(b, j, std::move(tmp));
            }
          }
          break;
        }
        case 1: {  // e_b += q * e_a
          if (a == b) break;
          LaurentPoly q = random_poly(rng, d, gamma_rank, 1, 2, 1);
          if (q.is_zero()) break;
          if (k < m) {
            PolyMatrix& bd = c.boundaries[k];
            for (int i = 0; i < bd.rows(); ++i)
              bd.set(i, b, bd.at(i, b) + bd.at(i, a) * q);
          }
          if (k >= 1) {
            PolyMatrix& bd = c.boundaries[k - 1];
            for (int j = 0; j < bd.cols(); ++j)
              bd.set(a, j, bd.at(a, j) - q * bd.at(b, j));
          }
          break;
        }
        default: {  // e_a *= unit
          LaurentPoly u = random_unit_monomial(rng, d, gamma_rank);
          LaurentPoly inv = novikov::exact_divide(
              LaurentPoly::constant(d, gamma_rank, 1), u);
          if (k < m) {
            PolyMatrix& bd = c.boundaries[k];
            for (int i = 0; i < bd.rows(); ++i)
              bd.set(i, a, bd.at(i, a) * u);
          }
          if (k >= 1) {
            PolyMatrix& bd = c.boundaries[k - 1];
            for (int j = 0; j < bd.cols(); ++j)
              bd.set(a, j, inv * bd.at(a, j));
          }
          break;
        }
      }
    }
  };

  for (int attempt = 0; attempt < 12; ++attempt) {
    novikov::BasedChainComplex c = build_seed();
    stir(c, static_cast<int>(rand_long(rng, 0, std::max(0, 8 - 2 * attempt))));
    if (max_terms(c) <= static_cast<std::size_t>(max_entry_terms)) return c;
  }
  return build_seed();  // pieces only, entries already small
}

// Invertible constant matrix over S with entries bounded by `entry_bound`:
// random elementary row operations on the identity, skipping any operation
// that would push an entry out of range.  The determinant stays a unit.
inline novikov::PolyMatrix random_unimodular_constant(Rng& rng, const Domain& d,
                                                      int n,
                                                      long entry_bound = 2) {
  using novikov::LaurentPoly;
  novikov::PolyMatrix mat = novikov::PolyMatrix::identity(d, 0, n);
  auto entry = [&](int i, int j) {
    const LaurentPoly& p = mat.at(i, j);
    return p.is_zero() ? mpq_class(0) : p.terms()[0].coeff;
  };
  long ops = rand_long(rng, 0, 3 * n);
  for (long op = 0; op < ops && n > 0; ++op) {
    int a = static_cast<int>(rand_long(rng, 0, n - 1));
    int b = static_cast<int>(rand_long(rng, 0, n - 1));
    switch (rand_long(rng, 0, 2)) {
      case 0: {  // swap rows
        for (int j = 0; j < n; ++j) {
          LaurentPoly tmp = mat.at(a, j);
          mat.set(a, j, mat.at(b, j));
          mat.set(b, j, std::move(tmp));
        }
        break;
      }
      case 1: {  // negate a row
        for (int j = 0; j < n; ++j) mat.set(a, j, -mat.at(a, j));
        break;
      }
      default: {  // row_a += row_b, bounded
        if (a == b) break;
        bool ok = true;
        for (int j = 0; j < n; ++j) {
          mpq_class v = entry(a, j) + entry(b, j);
          if (v > entry_bound || v < -entry_bound) ok = false;
        }
        if (!ok) break;
        for (int j = 0; j < n; ++j)
          mat.set(a, j, mat.at(a, j) + mat.at(b, j));
        break;
      }
    }
  }
  return mat;
}

// ---------------------------------------------------------------------------
// Oracles.

// Brute-force convolution of two polynomials into an exponent -> coefficient
// map, bypassing LaurentPoly arithmetic entirely.
inline std::map<Exponent, mpq_class> naive_convolution(const LaurentPoly& a,
                                                       const LaurentPoly& b) {
  std::map<Exponent, mpq_class> acc;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      Exponent e(ta.exp.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ta.exp[k] + tb.exp[k];
      acc[e] += ta.coeff * tb.coeff;
    }
  return acc;
}

// Brute-force triple product a*b*c by one three-way convolution loop.
inline LaurentPoly naive_triple_product(const LaurentPoly& a,
                                        const LaurentPoly& b,
                                        const LaurentPoly& c) {
  std::map<Exponent, mpq_class> acc;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      for (const auto& tc : c.terms()) {
        Exponent e(ta.exp.size());
        for (std::size_t k = 0; k < e.size(); ++k)
          e[k] = ta.exp[k] + tb.exp[k] + tc.exp[k];
        acc[e] += ta.coeff * tb.coeff * tc.coeff;
      }
  std::vector<std::pair<Exponent, mpq_class>> raw(acc.begin(), acc.end());
  return LaurentPoly::from_terms(a.domain(), a.rank(), raw);
}

inline LaurentPoly poly_from_map(const Domain& d, int rank,
                                 const std::map<Exponent, mpq_class>& m) {
  std::vector<std::pair<Exponent, mpq_class>> raw(m.begin(), m.end());
  return LaurentPoly::from_terms(d, rank, raw);
}

// Independent leading-part computation: evaluate xi on every exponent with
// plain rational arithmetic and keep the argmax set.
inline std::vector<Exponent> argmax_support(const LaurentPoly& p,
                                            const Character& xi) {
  std::vector<Exponent> best;
  mpq_class best_v;
  for (const auto& t : p.terms()) {
    mpq_class v = 0;
    for (std::size_t k = 0; k < t.exp.size(); ++k)
      v += xi.coords[k] * mpq_class(static_cast<long>(t.exp[k]));
    if (best.empty() || v > best_v) {
      best.clear();
      best_v = v;
      best.push_back(t.exp);
    } else if (v == best_v) {
      best.push_back(t.exp);
    }
  }
  return best;
}

}  // namespace testutil
