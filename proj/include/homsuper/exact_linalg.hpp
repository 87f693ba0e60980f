#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homsuper/errors.hpp"

namespace homsuper {

// Exact rational scalar: always lowest terms, positive denominator.
using Scalar = mpq_class;

// Accepts "p", "-p", "p/q", "+p/q". Rejects everything else, including q = 0.
Scalar scalar_from_string(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string scalar_to_string(const Scalar& value);

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& v, const Scalar& c);
std::string vec_to_string(const Vec& v);

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix diagonal(const Vec& entries);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  Matrix transposed() const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& other) const = default;

  // Matrix times column vector.
  Vec apply(const Vec& v) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }
  Scalar trace() const;

  std::optional<Matrix> inverse() const;
  // Integer power; negative exponents require invertibility (NotInvertible otherwise).
  Matrix pow(long k) const;

  Matrix kronecker(const Matrix& other) const;

  // Row-major flattening; vec_rm(A*X*B) == kronecker(A, B.transposed()).apply(vec_rm(X)).
  Vec vec_rm() const;
  static Matrix from_vec_rm(const Vec& v, std::size_t rows, std::size_t cols);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// In-place reduced row echelon form; returns pivot column indices. Zero rows sink to the bottom.
std::vector<std::size_t> rref_in_place(Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);

// One exact solution of m*x = rhs, or nothing when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

// Subspace of Q^n held as its unique reduced-row-echelon basis.
// Equality of subspaces is entry-wise equality of these bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  std::optional<Vec> coordinates_of(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);

// True iff the parts are independent: pairwise trivial intersections and
// dimensions adding up to the dimension of the sum.
bool is_direct_sum(const std::vector<Subspace>& parts);

// Monic characteristic polynomial, coefficients c[0..n] with p(x) = sum c[i] x^i.
std::vector<Scalar> char_poly(const Matrix& m);

// The eigenvalues when the characteristic polynomial splits over the
// rationals with all roots simple; nullopt otherwise or when root extraction
// exceeds its search budget.
std::optional<std::vector<Scalar>> distinct_rational_eigenvalues(const Matrix& m);

// Grows a reduced-row-echelon basis one vector at a time; used by closure loops.
class IncrementalRref {
 public:
  explicit IncrementalRref(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  // True iff v was independent of the rows seen so far.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace to_subspace() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;                // fully reduced, ordered by pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace homsuper
