#include "homsuper/core_algebra.hpp"

#include <set>

namespace homsuper {

HomLieSuperAlgebra::HomLieSuperAlgebra(std::string name, std::vector<std::string> basis_names,
                                       std::size_t even_dim,
                                       std::vector<std::vector<Vec>> structure, Matrix alpha)
    : name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      even_dim_(even_dim),
      structure_(std::move(structure)),
      alpha_(std::move(alpha)) {
  validate();
}

HomLieSuperAlgebra HomLieSuperAlgebra::abelian(std::size_t even_dim, std::size_t odd_dim,
                                               const std::string& name) {
  std::size_t n = even_dim + odd_dim;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back((i < even_dim ? "a" : "b") + std::to_string(i < even_dim ? i + 1 : i - even_dim + 1));
  std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n, zero_vec(n)));
  return HomLieSuperAlgebra(name, std::move(names), even_dim, std::move(structure),
                            Matrix::identity(n));
}

void HomLieSuperAlgebra::validate() const {
  std::size_t n = basis_names_.size();
  if (even_dim_ > n) fail(Err::InvalidAlgebra, "even_dim exceeds total dimension");
  std::set<std::string> seen;
  for (const std::string& bn : basis_names_) {
    if (bn.empty()) fail(Err::InvalidAlgebra, "empty basis name");
    if (!seen.insert(bn).second) fail(Err::InvalidAlgebra, "duplicate basis name '" + bn + "'");
  }
  if (structure_.size() != n) fail(Err::InvalidAlgebra, "structure table has wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (structure_[i].size() != n) fail(Err::InvalidAlgebra, "structure table has wrong column count");
    for (std::size_t j = 0; j < n; ++j)
      if (structure_[i][j].size() != n)
        fail(Err::InvalidAlgebra, "structure constant vector has wrong length");
  }
  if (alpha_.rows() != n || alpha_.cols() != n) fail(Err::InvalidAlgebra, "alpha has wrong shape");

  // Degree-zero bracket: [e_i, e_j] is supported in the (p_i + p_j) block.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int target = (parity_bit_of_basis(i) + parity_bit_of_basis(j)) % 2;
      for (std::size_t t = 0; t < n; ++t)
        if (structure_[i][j][t] != 0 && parity_bit_of_basis(t) != target)
          fail(Err::InvalidAlgebra,
               "bracket [" + basis_names_[i] + ", " + basis_names_[j] +
                   "] is not parity homogeneous of the required degree");
    }

  // Degree-zero alpha: block diagonal for the parity split.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (alpha_.at(r, c) != 0 && parity_bit_of_basis(r) != parity_bit_of_basis(c))
        fail(Err::InvalidAlgebra, "alpha mixes parity blocks");

  // Super skew-symmetry of the stored table.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = parity_bit_of_basis(i) * parity_bit_of_basis(j);
      Vec expected = vec_scaled(structure_[j][i], Scalar(s ? 1 : -1));
      if (structure_[i][j] != expected)
        fail(Err::InvalidAlgebra,
             "super skew-symmetry fails for pair (" + basis_names_[i] + ", " + basis_names_[j] + ")");
    }
}

std::optional<std::size_t> HomLieSuperAlgebra::basis_index(const std::string& basis_name) const {
  for (std::size_t i = 0; i < basis_names_.size(); ++i)
    if (basis_names_[i] == basis_name) return i;
  return std::nullopt;
}

Vec HomLieSuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n) fail(Err::DimensionMismatch, "bracket: wrong vector length");
  Vec r = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Scalar c = x[i] * y[j];
      const Vec& sc = structure_[i][j];
      for (std::size_t t = 0; t < n; ++t)
        if (sc[t] != 0) r[t] += c * sc[t];
    }
  }
  return r;
}

Matrix HomLieSuperAlgebra::adjoint(const Vec& x) const {
  std::size_t n = dim();
  if (x.size() != n) fail(Err::DimensionMismatch, "adjoint: wrong vector length");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, bracket(x, unit_vec(n, j)));
  return m;
}

Matrix HomLieSuperAlgebra::right_bracket_matrix(const Vec& w) const {
  std::size_t n = dim();
  if (w.size() != n) fail(Err::DimensionMismatch, "right_bracket_matrix: wrong vector length");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, bracket(unit_vec(n, j), w));
  return m;
}

Matrix HomLieSuperAlgebra::grading_automorphism() const {
  Vec d(dim());
  for (std::size_t i = 0; i < dim(); ++i) d[i] = (i < even_dim_) ? 1 : -1;
  return Matrix::diagonal(d);
}

Scalar HomLieSuperAlgebra::supertrace(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim())
    fail(Err::DimensionMismatch, "supertrace: matrix must be n x n");
  Scalar t = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i < even_dim_)
      t += m.at(i, i);
    else
      t -= m.at(i, i);
  }
  return t;
}

Matrix HomLieSuperAlgebra::alpha_power(long k) const { return alpha_.pow(k); }

Subspace HomLieSuperAlgebra::alpha_fixed_subspace() const {
  return kernel(alpha_ - Matrix::identity(dim()));
}

Subspace HomLieSuperAlgebra::derived_subalgebra() const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!vec_is_zero(structure_[i][j])) gens.push_back(structure_[i][j]);
  return Subspace::span(dim(), gens);
}

Subspace HomLieSuperAlgebra::even_part() const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < even_dim_; ++i) gens.push_back(unit_vec(dim(), i));
  return Subspace::span(dim(), gens);
}

Subspace HomLieSuperAlgebra::odd_part() const {
  std::vector<Vec> gens;
  for (std::size_t i = even_dim_; i < dim(); ++i) gens.push_back(unit_vec(dim(), i));
  return Subspace::span(dim(), gens);
}

Vec HomLieSuperAlgebra::parity_component(const Vec& v, Parity p) const {
  if (v.size() != dim()) fail(Err::DimensionMismatch, "parity_component: wrong length");
  Vec r = zero_vec(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_parity(i) == p) r[i] = v[i];
  return r;
}

bool HomLieSuperAlgebra::is_homogeneous(const Vec& v, Parity* out) const {
  Vec even = parity_component(v, Parity::Even);
  Vec odd = parity_component(v, Parity::Odd);
  bool has_even = !vec_is_zero(even), has_odd = !vec_is_zero(odd);
  if (has_even && has_odd) return false;
  if (out) *out = has_odd ? Parity::Odd : Parity::Even;
  return true;
}

Matrix HomLieSuperAlgebra::ad_k(const Vec& x, long k) const {
  std::size_t n = dim();
  if (x.size() != n) fail(Err::DimensionMismatch, "ad_k: wrong vector length");
  if (alpha_.apply(x) != x)
    fail(Err::NotAlphaFixed, "ad_k requires alpha(x) = x; got x = " + vec_to_string(x));
  Matrix ak = alpha_power(k);
  Matrix m(n, n);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Vec xp = parity_component(x, p);
    if (vec_is_zero(xp)) continue;
    int xbit = parity_bit(p);
    for (std::size_t j = 0; j < n; ++j) {
      Vec target = bracket(ak.col(j), xp);
      if (xbit * parity_bit_of_basis(j)) target = vec_scaled(target, Scalar(-1));
      for (std::size_t t = 0; t < n; ++t) m.at(t, j) += target[t];
    }
  }
  return m;
}

bool HomLieSuperAlgebra::check_super_skew() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      int s = parity_bit_of_basis(i) * parity_bit_of_basis(j);
      if (structure_[i][j] != vec_scaled(structure_[j][i], Scalar(s ? 1 : -1))) return false;
    }
  return true;
}

bool HomLieSuperAlgebra::check_degree_zero() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      int target = (parity_bit_of_basis(i) + parity_bit_of_basis(j)) % 2;
      for (std::size_t t = 0; t < dim(); ++t)
        if (structure_[i][j][t] != 0 && parity_bit_of_basis(t) != target) return false;
    }
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (alpha_.at(r, c) != 0 && parity_bit_of_basis(r) != parity_bit_of_basis(c)) return false;
  return true;
}

std::optional<JacobiWitness> HomLieSuperAlgebra::jacobi_witness_with_twist(
    const Matrix& twist) const {
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        int pi = parity_bit_of_basis(i), pj = parity_bit_of_basis(j), pk = parity_bit_of_basis(k);
        Vec sum = zero_vec(n);
        struct Term {
          std::size_t a;
          int sign_bit;
          const Vec* inner;
        };
        Term terms[3] = {{i, pi * pk, &structure_[j][k]},
                         {j, pj * pi, &structure_[k][i]},
                         {k, pk * pj, &structure_[i][j]}};
        for (const Term& t : terms) {
          Vec val = bracket(twist.col(t.a), *t.inner);
          if (t.sign_bit % 2) val = vec_scaled(val, Scalar(-1));
          sum = vec_add(sum, val);
        }
        if (!vec_is_zero(sum)) return JacobiWitness{i, j, k, sum};
      }
  return std::nullopt;
}

std::optional<JacobiWitness> HomLieSuperAlgebra::check_hom_jacobi() const {
  return jacobi_witness_with_twist(alpha_);
}

bool HomLieSuperAlgebra::check_multiplicative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec lhs = alpha_.apply(structure_[i][j]);
      Vec rhs = bracket(alpha_.col(i), alpha_.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool HomLieSuperAlgebra::check_alpha_invertible() const {
  return static_cast<bool>(alpha_.inverse());
}

bool HomLieSuperAlgebra::check_regular() const {
  return check_multiplicative() && check_alpha_invertible();
}

HomLieSuperAlgebra HomLieSuperAlgebra::with_alpha(Matrix new_alpha,
                                                  const std::string& new_name) const {
  return HomLieSuperAlgebra(new_name, basis_names_, even_dim_, structure_, std::move(new_alpha));
}

HomLieSuperAlgebra HomLieSuperAlgebra::renamed(const std::string& new_name) const {
  HomLieSuperAlgebra copy = *this;
  copy.name_ = new_name;
  return copy;
}

VerificationReport verify(const HomLieSuperAlgebra& a) {
  VerificationReport r;
  r.skew_ok = a.check_super_skew();
  r.hom_jacobi_witness = a.check_hom_jacobi();
  r.hom_jacobi_ok = !r.hom_jacobi_witness.has_value();
  r.multiplicative = a.check_multiplicative();
  r.regular = r.multiplicative && a.check_alpha_invertible();
  r.is_hom_lie_superalgebra = r.skew_ok && r.hom_jacobi_ok;
  r.is_lie_superalgebra =
      r.skew_ok && !a.jacobi_witness_with_twist(Matrix::identity(a.dim())).has_value();
  return r;
}

HomLieSuperAlgebra yau_twist(const HomLieSuperAlgebra& a, const Matrix& sigma,
                             const std::string& new_name) {
  std::size_t n = a.dim();
  if (!a.alpha().is_identity())
    fail(Err::HypothesisNotMet, "yau_twist requires the input twist to be the identity");
  if (sigma.rows() != n || sigma.cols() != n)
    fail(Err::NotAutomorphism, "sigma has the wrong shape");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (sigma.at(r, c) != 0 && a.parity_bit_of_basis(r) != a.parity_bit_of_basis(c))
        fail(Err::NotAutomorphism, "sigma mixes parity blocks");
  if (!sigma.inverse()) fail(Err::NotAutomorphism, "sigma is singular");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = sigma.apply(a.bracket_basis(i, j));
      Vec rhs = a.bracket(sigma.col(i), sigma.col(j));
      if (lhs != rhs)
        fail(Err::NotAutomorphism,
             "sigma is not a bracket automorphism at pair (" + a.basis_name(i) + ", " +
                 a.basis_name(j) + ")");
    }
  std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n, zero_vec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) structure[i][j] = sigma.apply(a.bracket_basis(i, j));
  HomLieSuperAlgebra twisted(new_name, a.basis_names(), a.even_dim(), std::move(structure), sigma);
  if (twisted.check_hom_jacobi().has_value() || !twisted.check_multiplicative())
    fail(Err::InvalidAlgebra, "yau twist failed its postcondition");
  return twisted;
}

}  // namespace homsuper
