#include "homsuper/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace homsuper {

Scalar scalar_from_string(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  bool ok = !t.empty();
  std::size_t pos = (t[0] == '-') ? 1 : 0;
  bool digits = false, slash = false, denom_digits = false;
  for (std::size_t i = pos; ok && i < t.size(); ++i) {
    char c = t[i];
    if (c == '/') {
      if (slash || !digits) ok = false;
      slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? denom_digits : digits) = true;
    } else {
      ok = false;
    }
  }
  if (!ok || !digits || (slash && !denom_digits))
    throw std::invalid_argument("bad rational: '" + text + "'");
  Scalar v(t, 10);
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  v.canonicalize();
  return v;
}

std::string scalar_to_string(const Scalar& value) { return value.get_str(); }

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const Scalar& x : v)
    if (x != 0) return false;
  return true;
}

static void check_same_size(const Vec& a, const Vec& b, const char* who) {
  if (a.size() != b.size()) fail(Err::DimensionMismatch, std::string(who) + ": vector lengths differ");
}

Vec vec_add(const Vec& a, const Vec& b) {
  check_same_size(a, b, "vec_add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  check_same_size(a, b, "vec_sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scaled(const Vec& v, const Scalar& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += scalar_to_string(v[i]);
  }
  return s + ")";
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::diagonal(const Vec& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail(Err::DimensionMismatch, "from_rows: ragged rows");
    m.set_row(r, rows[r]);
  }
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(Err::DimensionMismatch, "hstack: row counts differ");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) fail(Err::DimensionMismatch, "vstack: column counts differ");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) m.set_row(r, a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) m.set_row(a.rows() + r, b.row(r));
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) fail(Err::DimensionMismatch, "set_row: wrong length");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) fail(Err::DimensionMismatch, "set_col: wrong length");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(Err::DimensionMismatch, "matrix addition: shapes differ");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + other.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(Err::DimensionMismatch, "matrix subtraction: shapes differ");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - other.data_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) fail(Err::DimensionMismatch, "matrix product: inner dimensions differ");
  Matrix m(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) m.at(r, c) += a * other.at(k, c);
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(Err::DimensionMismatch, "apply: vector length != cols");
  Vec r = zero_vec(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool Matrix::is_zero() const {
  for (const Scalar& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != ((r == c) ? 1 : 0)) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) fail(Err::DimensionMismatch, "trace: matrix not square");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) fail(Err::DimensionMismatch, "inverse: matrix not square");
  Matrix aug = hstack(*this, identity(rows_));
  std::vector<std::size_t> piv = rref_in_place(aug);
  if (piv.size() != rows_ || (rows_ > 0 && piv.back() >= rows_)) return std::nullopt;
  Matrix inv(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rows_; ++c) inv.at(r, c) = aug.at(r, rows_ + c);
  return inv;
}

Matrix Matrix::pow(long k) const {
  if (rows_ != cols_) fail(Err::DimensionMismatch, "pow: matrix not square");
  Matrix base = *this;
  if (k < 0) {
    std::optional<Matrix> inv = inverse();
    if (!inv) fail(Err::NotInvertible, "pow: negative power of a singular matrix");
    base = *inv;
    k = -k;
  }
  Matrix result = identity(rows_);
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Matrix Matrix::kronecker(const Matrix& other) const {
  Matrix m(rows_ * other.rows_, cols_ * other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < other.rows_; ++k)
        for (std::size_t l = 0; l < other.cols_; ++l)
          m.at(i * other.rows_ + k, j * other.cols_ + l) = a * other.at(k, l);
    }
  return m;
}

Vec Matrix::vec_rm() const { return data_; }

Matrix Matrix::from_vec_rm(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) fail(Err::DimensionMismatch, "from_vec_rm: wrong length");
  Matrix m(rows, cols);
  m.data_ = v;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << " ";
      out << scalar_to_string(at(r, c));
    }
    out << "]";
    if (r + 1 < rows_) out << "\n";
  }
  return out.str();
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv_pivot = Scalar(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv_pivot;
    for (std::size_t q = 0; q < m.rows(); ++q) {
      if (q == r || m.at(q, c) == 0) continue;
      Scalar f = m.at(q, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(q, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix rref(const Matrix& m) {
  Matrix copy = m;
  rref_in_place(copy);
  return copy;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref_in_place(copy).size();
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) fail(Err::DimensionMismatch, "determinant: matrix not square");
  Matrix a = m;
  std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Scalar inv_pivot = Scalar(1) / a.at(c, c);
    for (std::size_t q = c + 1; q < n; ++q) {
      if (a.at(q, c) == 0) continue;
      Scalar f = a.at(q, c) * inv_pivot;
      for (std::size_t j = c; j < n; ++j) a.at(q, j) -= f * a.at(c, j);
    }
  }
  return det;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) fail(Err::DimensionMismatch, "solve: rhs length != rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = rhs[r];
  }
  std::vector<std::size_t> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, m.cols());
  return x;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(Matrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors)
    if (v.size() != ambient_dim) fail(Err::AmbientMismatch, "span: vector of wrong length");
  if (vectors.empty()) return zero(ambient_dim);
  return row_space(Matrix::from_rows(vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> piv = rref_in_place(r);
  Subspace s;
  s.ambient_ = m.cols();
  s.pivots_ = piv;
  s.basis_ = Matrix(piv.size(), m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) s.basis_.set_row(i, r.row(i));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  return static_cast<bool>(coordinates_of(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(Err::AmbientMismatch, "contains: ambient dims differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) fail(Err::AmbientMismatch, "coordinates_of: wrong length");
  Vec residual = v;
  Vec coords(dim(), Scalar(0));
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar c = residual[pivots_[r]];
    if (c == 0) continue;
    coords[r] = c;
    for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= c * basis_.at(r, j);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(Err::AmbientMismatch, "sum: ambient dims differ");
  return row_space(Matrix::vstack(basis_, other.basis_));
}

// Row space intersection: x = A^T u = B^T w, so (u, w) ranges over the kernel
// of [A^T | -B^T] and x is recovered from the u half.
Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(Err::AmbientMismatch, "intersect: ambient dims differ");
  if (is_zero() || other.is_zero()) return zero(ambient_);
  Matrix at = basis_.transposed();
  Matrix bt = other.basis_.transposed().scaled(Scalar(-1));
  Matrix m = Matrix::hstack(at, bt);
  Subspace ker = kernel(m);
  std::vector<Vec> intersection_vectors;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec uw = ker.basis_vector(i);
    Vec u(uw.begin(), uw.begin() + static_cast<std::ptrdiff_t>(dim()));
    intersection_vectors.push_back(at.apply(u));
  }
  return span(ambient_, intersection_vectors);
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> piv = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.cols());
    v[f] = 1;
    for (std::size_t row_i = 0; row_i < piv.size(); ++row_i) v[piv[row_i]] = -r.at(row_i, f);
    basis.push_back(v);
  }
  return Subspace::span(m.cols(), basis);
}

bool is_direct_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) return true;
  std::size_t ambient = parts[0].ambient_dim();
  std::size_t total = 0;
  Subspace acc = Subspace::zero(ambient);
  for (const Subspace& p : parts) {
    if (p.ambient_dim() != ambient) fail(Err::AmbientMismatch, "is_direct_sum: ambient dims differ");
    total += p.dim();
    acc = acc.sum(p);
  }
  if (acc.dim() != total) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!parts[i].intersect(parts[j]).is_zero()) return false;
  return true;
}

bool IncrementalRref::add(const Vec& v) {
  if (v.size() != ambient_) fail(Err::AmbientMismatch, "IncrementalRref::add: wrong length");
  Vec w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = w[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * rows_[r][j];
  }
  std::size_t p = 0;
  while (p < ambient_ && w[p] == 0) ++p;
  if (p == ambient_) return false;
  Scalar inv_pivot = Scalar(1) / w[p];
  for (std::size_t j = p; j < ambient_; ++j) w[j] *= inv_pivot;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = rows_[r][p];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) rows_[r][j] -= c * w[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), w);
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool IncrementalRref::contains(const Vec& v) const {
  if (v.size() != ambient_) fail(Err::AmbientMismatch, "IncrementalRref::contains: wrong length");
  Vec w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = w[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * rows_[r][j];
  }
  return vec_is_zero(w);
}

Subspace IncrementalRref::to_subspace() const { return Subspace::span(ambient_, rows_); }

std::vector<Scalar> char_poly(const Matrix& m) {
  if (!m.is_square()) fail(Err::DimensionMismatch, "char_poly: matrix must be square");
  std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  // Faddeev-LeVerrier: exact over the rationals.
  Matrix b = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix prod = m * b;
    Scalar ck = -prod.trace() / Scalar(static_cast<long>(k));
    c[n - k] = ck;
    b = prod + Matrix::identity(n).scaled(ck);
  }
  return c;
}

namespace {

// Divisors of |v|, or nullopt when trial division exceeds its budget.
std::optional<std::vector<mpz_class>> bounded_divisors(mpz_class v) {
  v = abs(v);
  if (v == 0) return std::nullopt;
  std::vector<mpz_class> out;
  mpz_class i = 1;
  long steps = 0;
  for (; i * i <= v; ++i) {
    if (++steps > 2000000) return std::nullopt;
    if (v % i == 0) {
      out.push_back(i);
      if (i * i != v) out.push_back(v / i);
    }
  }
  return out;
}

Scalar eval_poly(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc = 0;
  for (std::size_t t = c.size(); t-- > 0;) acc = acc * x + c[t];
  return acc;
}

std::optional<Scalar> find_rational_root(const std::vector<Scalar>& c) {
  std::size_t deg = c.size() - 1;
  if (c[0] == 0) return Scalar(0);
  mpz_class denom_lcm = 1;
  for (const Scalar& s : c) {
    mpz_class d = s.get_den();
    denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
  }
  mpz_class a0 = Scalar(c[0] * denom_lcm).get_num();
  mpz_class an = Scalar(c[deg] * denom_lcm).get_num();
  auto ps = bounded_divisors(a0);
  auto qs = bounded_divisors(an);
  if (!ps || !qs) return std::nullopt;
  for (const mpz_class& p : *ps)
    for (const mpz_class& q : *qs)
      for (int sign : {1, -1}) {
        Scalar cand(p * sign, q);
        cand.canonicalize();
        if (eval_poly(c, cand) == 0) return cand;
      }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Scalar>> distinct_rational_eigenvalues(const Matrix& m) {
  std::vector<Scalar> poly = char_poly(m);
  std::vector<Scalar> roots;
  while (poly.size() > 1) {
    std::optional<Scalar> r = find_rational_root(poly);
    if (!r) return std::nullopt;
    roots.push_back(*r);
    // Synthetic division by (x - r); the remainder vanishes by construction.
    std::size_t deg = poly.size() - 1;
    std::vector<Scalar> quot(deg);
    Scalar carry = 0;
    for (std::size_t t = deg; t-- > 0;) {
      quot[t] = poly[t + 1] + carry;
      carry = quot[t] * (*r);
    }
    poly = std::move(quot);
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) return std::nullopt;
  return roots;
}

}  // namespace homsuper
