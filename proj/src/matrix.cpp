#include "novikov/matrix.hpp"

#include <string>
#include <utility>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

void require_same_shape_inputs(const PolyMatrix& a, const PolyMatrix& b,
                               bool product) {
  if (a.domain() != b.domain())
    throw structural_error("matrix domain mismatch: " + a.domain().to_string() +
                           " vs " + b.domain().to_string());
  if (a.rank() != b.rank())
    throw structural_error("matrix group rank mismatch");
  if (product) {
    if (a.cols() != b.rows())
      throw structural_error("matrix shape mismatch: " +
                             std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " times " +
                             std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
  } else if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw structural_error("matrix shape mismatch");
  }
}

}  // namespace

PolyMatrix::PolyMatrix(Domain domain, int rank, int rows, int cols)
    : domain_(std::move(domain)), rank_(rank), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw structural_error("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols,
                  LaurentPoly::zero(domain_, rank_));
}

PolyMatrix PolyMatrix::identity(Domain domain, int rank, int n) {
  PolyMatrix m(domain, rank, n, n);
  for (int i = 0; i < n; ++i)
    m.set(i, i, LaurentPoly::constant(m.domain_, rank, 1));
  return m;
}

const LaurentPoly& PolyMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw structural_error("matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

void PolyMatrix::set(int i, int j, LaurentPoly value) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw structural_error("matrix index out of range");
  if (value.domain() != domain_ || value.rank() != rank_)
    throw structural_error("matrix entry has mismatched domain or rank");
  entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(value);
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& other) const {
  require_same_shape_inputs(*this, other, true);
  PolyMatrix out(domain_, rank_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) {
      LaurentPoly acc = LaurentPoly::zero(domain_, rank_);
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * other.at(k, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

PolyMatrix PolyMatrix::add(const PolyMatrix& other) const {
  require_same_shape_inputs(*this, other, false);
  PolyMatrix out(domain_, rank_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j) + other.at(i, j));
  return out;
}

PolyMatrix PolyMatrix::negate() const {
  PolyMatrix out(domain_, rank_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, -at(i, j));
  return out;
}

PolyMatrix PolyMatrix::select(const std::vector<int>& row_idx,
                              const std::vector<int>& col_idx) const {
  PolyMatrix out(domain_, rank_, static_cast<int>(row_idx.size()),
                 static_cast<int>(col_idx.size()));
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out.set(static_cast<int>(i), static_cast<int>(j),
              at(row_idx[i], col_idx[j]));
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return domain_ == other.domain_ && rank_ == other.rank_ &&
         rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

namespace detail {

LaurentPoly determinant_cofactor(const PolyMatrix& a) {
  const int n = a.rows();
  if (n == 0) return LaurentPoly::constant(a.domain(), a.rank(), 1);
  if (n == 1) return a.at(0, 0);
  LaurentPoly acc = LaurentPoly::zero(a.domain(), a.rank());
  std::vector<int> all_cols(n);
  for (int j = 0; j < n; ++j) all_cols[j] = j;
  for (int i = 0; i < n; ++i) {
    if (a.at(i, 0).is_zero()) continue;
    std::vector<int> rows;
    rows.reserve(n - 1);
    for (int r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    std::vector<int> cols(all_cols.begin() + 1, all_cols.end());
    LaurentPoly minor = determinant_cofactor(a.select(rows, cols));
    LaurentPoly term = a.at(i, 0) * minor;
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

LaurentPoly determinant_fraction_free(const PolyMatrix& a) {
  const int n = a.rows();
  if (n == 0) return LaurentPoly::constant(a.domain(), a.rank(), 1);
  PolyMatrix b = a;
  LaurentPoly prev = LaurentPoly::constant(a.domain(), a.rank(), 1);
  bool negate_result = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (b.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!b.at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return LaurentPoly::zero(a.domain(), a.rank());
      for (int j = 0; j < n; ++j) {
        LaurentPoly tmp = b.at(k, j);
        b.set(k, j, b.at(swap_row, j));
        b.set(swap_row, j, std::move(tmp));
      }
      negate_result = !negate_result;
    }
    // One-step fraction-free update: every new entry is a minor of the
    // original matrix, so dividing by the previous pivot is exact.
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = b.at(k, k) * b.at(i, j) - b.at(i, k) * b.at(k, j);
        b.set(i, j, exact_divide(num, prev));
      }
      b.set(i, k, LaurentPoly::zero(a.domain(), a.rank()));
    }
    prev = b.at(k, k);
  }
  LaurentPoly det = b.at(n - 1, n - 1);
  return negate_result ? -det : det;
}

}  // namespace detail

LaurentPoly determinant(const PolyMatrix& a) {
  if (a.rows() != a.cols())
    throw structural_error("determinant of a non-square matrix (" +
                           std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + ")");
  return a.rows() <= 4 ? detail::determinant_cofactor(a)
                       : detail::determinant_fraction_free(a);
}

int rank_over_fraction_field(const PolyMatrix& a) {
  PolyMatrix b = a;
  const int rows = a.rows(), cols = a.cols();
  LaurentPoly prev = LaurentPoly::constant(a.domain(), a.rank(), 1);
  int pivot_row = 0;
  for (int c = 0; c < cols && pivot_row < rows; ++c) {
    int found = -1;
    for (int i = pivot_row; i < rows; ++i)
      if (!b.at(i, c).is_zero()) {
        found = i;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row) {
      for (int j = 0; j < cols; ++j) {
        LaurentPoly tmp = b.at(pivot_row, j);
        b.set(pivot_row, j, b.at(found, j));
        b.set(found, j, std::move(tmp));
      }
    }
    for (int i = pivot_row + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        LaurentPoly num =
            b.at(pivot_row, c) * b.at(i, j) - b.at(i, c) * b.at(pivot_row, j);
        b.set(i, j, exact_divide(num, prev));
      }
      b.set(i, c, LaurentPoly::zero(a.domain(), a.rank()));
    }
    prev = b.at(pivot_row, c);
    ++pivot_row;
  }
  return pivot_row;
}

IntegralSubset invertibility_cones(const LaurentPoly& p) {
  const int rank = p.rank();
  if (p.is_zero()) return IntegralSubset::empty_set(rank);
  std::vector<IntegralCone> cones;
  const auto& terms = p.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!p.domain().is_unit(terms[i].coeff)) continue;
    std::vector<HalfSpace> hs;
    hs.reserve(terms.size() - 1);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j == i) continue;
      std::vector<mpz_class> form(rank);
      for (int k = 0; k < rank; ++k)
        form[k] = mpz_class(terms[i].exp[k]) - mpz_class(terms[j].exp[k]);
      hs.emplace_back(std::move(form), true);
    }
    IntegralCone cone(rank, std::move(hs));
    if (!cone_is_empty(cone)) cones.push_back(std::move(cone));
  }
  return IntegralSubset(rank, std::move(cones));
}

IntegralSubset matrix_invertibility_cones(const PolyMatrix& a) {
  return invertibility_cones(determinant(a));
}

namespace {

mpq_class constant_of(const LaurentPoly& p) {
  return p.is_zero() ? mpq_class(0) : p.terms()[0].coeff;
}

void require_invertible_constant(const PolyMatrix& a, mpq_class* det_out) {
  if (a.rank() != 0)
    throw structural_error("constant-matrix inverse needs group rank 0");
  if (a.rows() != a.cols())
    throw structural_error("cannot invert a non-square matrix");
  LaurentPoly det = determinant(a);
  if (det.is_zero() || !a.domain().is_unit(det.terms()[0].coeff))
    throw domain_error("matrix determinant " +
                       (det.is_zero() ? std::string("0")
                                      : a.domain().element_to_string(
                                            det.terms()[0].coeff)) +
                       " is not a unit of " + a.domain().to_string());
  *det_out = det.terms()[0].coeff;
}

}  // namespace

namespace detail {

PolyMatrix invert_constant_adjugate(const PolyMatrix& a) {
  mpq_class det;
  require_invertible_constant(a, &det);
  const int n = a.rows();
  const Domain& d = a.domain();
  PolyMatrix inv(d, 0, n, n);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < n; ++r)
        if (r != i) rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      mpq_class minor = constant_of(determinant_cofactor(a.select(rows, cols)));
      if ((i + j) % 2 == 1) minor = d.neg(minor);
      // Adjugate transposes the cofactors; dividing by the unit det is
      // exact in every domain.
      auto q = d.divide_exact(minor, det);
      if (!q) throw error("internal: unit determinant failed to divide a cofactor");
      inv.set(j, i, LaurentPoly::constant(d, 0, *q));
    }
  return inv;
}

PolyMatrix invert_constant_elimination(const PolyMatrix& a) {
  mpq_class det;
  require_invertible_constant(a, &det);
  const int n = a.rows();
  const Domain& d = a.domain();
  // Gauss-Jordan over the rationals on the canonical representatives, then
  // pull the entries back into S.  For Z the unit determinant makes the
  // rational inverse integral; for GF(p) the denominators stay prime to p
  // because they divide a determinant that is nonzero mod p.
  std::vector<std::vector<mpq_class>> work(n, std::vector<mpq_class>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work[i][j] = constant_of(a.at(i, j));
    work[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (work[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw error("internal: singular matrix slipped past the unit check");
    std::swap(work[col], work[pivot]);
    mpq_class p = work[col][col];
    for (int j = 0; j < 2 * n; ++j) work[col][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || work[i][col] == 0) continue;
      mpq_class f = work[i][col];
      for (int j = 0; j < 2 * n; ++j) work[i][j] -= f * work[col][j];
    }
  }
  PolyMatrix inv(d, 0, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv.set(i, j, LaurentPoly::constant(d, 0, d.canonical(work[i][n + j])));
  return inv;
}

}  // namespace detail

PolyMatrix invert_constant_matrix(const PolyMatrix& a) {
  return a.rows() <= 4 ? detail::invert_constant_adjugate(a)
                       : detail::invert_constant_elimination(a);
}

}  // namespace novikov
