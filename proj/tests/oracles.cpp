#include "oracles.hpp"

#include <vector>

namespace homsuper::oracles {

namespace {

Matrix minor_of(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t r = 0, tr = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, tc = 0; c < m.cols(); ++c) {
      if (c == col) continue;
      out.at(tr, tc) = m.at(r, c);
      ++tc;
    }
    ++tr;
  }
  return out;
}

// All k-subsets of 0..n-1 in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Scalar-loop product, independent of Matrix::operator*.
Matrix mul_loops(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t s = 0; s < a.cols(); ++s) out.at(r, c) += a.at(r, s) * b.at(s, c);
  return out;
}

Matrix alpha_power_loops(const HomLieSuperAlgebra& a, long k) {
  Matrix out = Matrix::identity(a.dim());
  for (long i = 0; i < k; ++i) out = mul_loops(out, a.alpha());
  return out;
}

// Row elimination over a working copy; the membership test for the naive
// closure, written without the library rref.
class LocalSpan {
 public:
  explicit LocalSpan(std::size_t n) : n_(n) {}

  bool add(Vec v) {
    reduce(v);
    std::size_t piv = n_;
    for (std::size_t i = 0; i < n_; ++i)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    if (piv == n_) return false;
    Scalar inv = 1 / v[piv];
    for (Scalar& x : v) x *= inv;
    rows_.push_back(v);
    pivots_.push_back(piv);
    kept_.push_back(v);
    return true;
  }

  const std::vector<Vec>& vectors() const { return kept_; }

 private:
  void reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v[pivots_[r]];
      if (c == 0) continue;
      Scalar f = c;
      for (std::size_t i = 0; i < n_; ++i) v[i] -= f * rows_[r][i];
    }
  }

  std::size_t n_;
  std::vector<Vec> rows_, kept_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Scalar det_cofactor(const Matrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Scalar out = 0;
  Scalar sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (m.at(0, c) != 0) out += sign * m.at(0, c) * det_cofactor(minor_of(m, 0, c));
    sign = -sign;
  }
  return out;
}

std::size_t rank_minors(const Matrix& m) {
  std::size_t top = m.rows() < m.cols() ? m.rows() : m.cols();
  for (std::size_t k = top; k > 0; --k) {
    std::vector<std::size_t> rows(k), cols(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) cols[i] = i;
      do {
        Matrix sub(k, k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(rows[r], cols[c]);
        if (det_cofactor(sub) != 0) return k;
      } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
  }
  return 0;
}

Matrix killing_gram_by_traces(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar k = 0;
      for (std::size_t l = 0; l < n; ++l) {
        Scalar diag = 0;
        const Vec& inner = a.bracket_basis(j, l);
        for (std::size_t p = 0; p < n; ++p)
          if (inner[p] != 0) diag += inner[p] * a.bracket_basis(i, p)[l];
        k += l < a.even_dim() ? diag : -diag;
      }
      gram.at(i, j) = k;
    }
  return gram;
}

Matrix invariant_form_rows(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  Matrix rows(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        std::size_t r = (i * n + j) * n + l;
        const Vec& left = a.bracket_basis(i, j);
        for (std::size_t p = 0; p < n; ++p) rows.at(r, p * n + l) += left[p];
        const Vec& right = a.bracket_basis(j, l);
        for (std::size_t q = 0; q < n; ++q) rows.at(r, i * n + q) -= right[q];
      }
  return rows;
}

Matrix derivation_rows(const HomLieSuperAlgebra& a, long k, Parity d) {
  std::size_t n = a.dim();
  Matrix ak = alpha_power_loops(a, k);
  int dbit = parity_bit(d);
  std::vector<Matrix> blocks;
  // D[e_i,e_j] - [D e_i, a^k e_j] - (-1)^{d p_i} [a^k e_i, D e_j] = 0,
  // one row per pair and output coordinate.
  Matrix leibniz(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool flip = dbit == 1 && a.parity_bit_of_basis(i) == 1;
      for (std::size_t t = 0; t < n; ++t) {
        std::size_t row = (i * n + j) * n + t;
        const Vec& cij = a.bracket_basis(i, j);
        for (std::size_t p = 0; p < n; ++p) leibniz.at(row, t * n + p) += cij[p];
        for (std::size_t r = 0; r < n; ++r) {
          Scalar c1 = 0, c2 = 0;
          for (std::size_t s = 0; s < n; ++s) {
            c1 += ak.at(s, j) * a.bracket_basis(r, s)[t];
            c2 += ak.at(s, i) * a.bracket_basis(s, r)[t];
          }
          leibniz.at(row, r * n + i) -= c1;
          if (flip)
            leibniz.at(row, r * n + j) += c2;
          else
            leibniz.at(row, r * n + j) -= c2;
        }
      }
    }
  // D alpha = alpha D.
  Matrix commute(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t row = r * n + c;
      for (std::size_t s = 0; s < n; ++s) {
        commute.at(row, r * n + s) += a.alpha().at(s, c);
        commute.at(row, s * n + c) -= a.alpha().at(r, s);
      }
    }
  // Parity-d support pattern.
  Matrix parity_rows(0, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a.parity_bit_of_basis(r) != (a.parity_bit_of_basis(c) + dbit) % 2) {
        Matrix unit(1, n * n);
        unit.at(0, r * n + c) = 1;
        parity_rows = Matrix::vstack(parity_rows, unit);
      }
  return Matrix::vstack(Matrix::vstack(leibniz, commute), parity_rows);
}

Subspace naive_closure(const HomLieSuperAlgebra& a, const Vec& seed, const IdealSpec& spec) {
  std::size_t n = a.dim();
  LocalSpan span(n);
  std::vector<Vec> queue;
  auto push = [&](const Vec& v) {
    if (spec.graded) {
      for (Parity p : {Parity::Even, Parity::Odd}) {
        Vec part = a.parity_component(v, p);
        if (!vec_is_zero(part) && span.add(part)) queue.push_back(part);
      }
    } else if (!vec_is_zero(v) && span.add(v)) {
      queue.push_back(v);
    }
  };
  push(seed);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vec v = queue[head];
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = unit_vec(n, i);
      if (spec.side != IdealSide::Right) push(a.bracket(e, v));
      if (spec.side != IdealSide::Left) push(a.bracket(v, e));
    }
    if (spec.alpha_invariant) push(a.alpha().apply(v));
  }
  return Subspace::span(n, span.vectors());
}

}  // namespace homsuper::oracles
