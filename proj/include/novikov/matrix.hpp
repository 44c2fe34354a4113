#pragma once

#include <vector>

#include "novikov/cones.hpp"
#include "novikov/laurent.hpp"

namespace novikov {

// Dense matrix over S[Gamma].  Matrices act on row vectors from the right,
// so a map C -> D with dim C = m, dim D = n is an m x n matrix.
class PolyMatrix {
public:
  PolyMatrix(Domain domain, int rank, int rows, int cols);  // zero matrix
  static PolyMatrix identity(Domain domain, int rank, int n);

  const Domain& domain() const { return domain_; }
  int rank() const { return rank_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const LaurentPoly& at(int i, int j) const;
  void set(int i, int j, LaurentPoly value);

  PolyMatrix multiply(const PolyMatrix& other) const;
  PolyMatrix add(const PolyMatrix& other) const;
  PolyMatrix negate() const;
  // Submatrix with the given row and column index lists (ascending order is
  // the caller's responsibility; indices are bounds-checked).
  PolyMatrix select(const std::vector<int>& row_idx,
                    const std::vector<int>& col_idx) const;
  bool is_zero() const;

  bool operator==(const PolyMatrix& other) const;

private:
  Domain domain_;
  int rank_;
  int rows_, cols_;
  std::vector<LaurentPoly> entries_;
};

// Exact determinant.  Small matrices go through cofactor expansion; larger
// ones through fraction-free elimination whose divisions are exact by the
// minor identities.  The empty 0x0 matrix has determinant 1.
LaurentPoly determinant(const PolyMatrix& a);

// Rank of a over the fraction field of S[Gamma], by fraction-free row
// echelon reduction with column skipping.
int rank_over_fraction_field(const PolyMatrix& a);

// The set of characters xi for which p becomes a unit in the rational
// Novikov ring: one open cone per unit-coefficient term, demanding that the
// term's exponent strictly dominates every other.  Cones that are already
// empty are dropped; the remaining cones are pairwise disjoint.
IntegralSubset invertibility_cones(const LaurentPoly& p);

// invertibility_cones of det(a); requires a square.
IntegralSubset matrix_invertibility_cones(const PolyMatrix& a);

// Exact inverse of a square matrix of constants (group rank 0) whose
// determinant is a unit of S; throws domain_error otherwise.  Small
// matrices use the adjugate, larger ones exact elimination.
PolyMatrix invert_constant_matrix(const PolyMatrix& a);

namespace detail {
LaurentPoly determinant_cofactor(const PolyMatrix& a);
LaurentPoly determinant_fraction_free(const PolyMatrix& a);
PolyMatrix invert_constant_adjugate(const PolyMatrix& a);
PolyMatrix invert_constant_elimination(const PolyMatrix& a);
}  // namespace detail

}  // namespace novikov
