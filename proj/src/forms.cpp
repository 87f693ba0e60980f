#include "homsuper/forms.hpp"

namespace homsuper {

const char* form_parity_name(FormParity p) {
  switch (p) {
    case FormParity::Even:
      return "even";
    case FormParity::Odd:
      return "odd";
    default:
      return "mixed";
  }
}

BilinearForm form_from_gram(const HomLieSuperAlgebra& a, Matrix gram) {
  std::size_t n = a.dim();
  if (gram.rows() != n || gram.cols() != n)
    fail(Err::DimensionMismatch, "form gram must be n x n");
  bool diag_block = false, off_block = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (gram.at(i, j) == 0) continue;
      (a.parity_bit_of_basis(i) == a.parity_bit_of_basis(j) ? diag_block : off_block) = true;
    }
  BilinearForm f;
  f.gram = std::move(gram);
  f.parity = (diag_block && off_block) ? FormParity::Mixed
             : off_block               ? FormParity::Odd
                                       : FormParity::Even;
  return f;
}

FormSpace invariant_form_space(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  FormSpace fs;
  fs.algebra_dim = n;
  if (n == 0) return fs;
  Matrix ident = Matrix::identity(n);
  // For each basis vector b: R_b^T G = G L_b with R_b : x -> [x,b] and
  // L_b : x -> [b,x], stated on vec(G).
  Matrix sys(0, n * n);
  for (std::size_t b = 0; b < n; ++b) {
    Vec e = unit_vec(n, b);
    Matrix block = a.right_bracket_matrix(e).transposed().kronecker(ident) -
                   ident.kronecker(a.adjoint(e).transposed());
    sys = sys.rows() == 0 ? block : Matrix::vstack(sys, block);
  }
  Subspace sol = kernel(sys);
  for (std::size_t r = 0; r < sol.dim(); ++r)
    fs.basis.push_back(form_from_gram(a, Matrix::from_vec_rm(sol.basis_vector(r), n, n)));
  fs.dimension = fs.basis.size();
  return fs;
}

Subspace form_space_as_subspace(const FormSpace& fs) {
  std::vector<Vec> rows;
  for (const BilinearForm& f : fs.basis) rows.push_back(f.gram.vec_rm());
  return Subspace::span(fs.algebra_dim * fs.algebra_dim, rows);
}

BilinearForm killing_form(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(a.adjoint(unit_vec(n, i)));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = a.supertrace(ads[i] * ads[j]);
  return form_from_gram(a, std::move(gram));
}

BilinearForm alpha_twisted_killing_form(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adl = a.adjoint(a.alpha().col(i));
    for (std::size_t j = 0; j < n; ++j)
      gram.at(i, j) = a.supertrace(adl * a.adjoint(unit_vec(n, j)));
  }
  return form_from_gram(a, std::move(gram));
}

Subspace radical(const HomLieSuperAlgebra& a, const BilinearForm& phi) {
  (void)a;
  return kernel(phi.gram);
}

bool is_nondegenerate(const HomLieSuperAlgebra& a, const BilinearForm& phi) {
  return radical(a, phi).is_zero();
}

bool is_supersymmetric(const HomLieSuperAlgebra& a, const BilinearForm& phi) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = a.parity_bit_of_basis(i) * a.parity_bit_of_basis(j);
      Scalar expect = phi.gram.at(j, i) * Scalar(s ? -1 : 1);
      if (phi.gram.at(i, j) != expect) return false;
    }
  return true;
}

bool is_invariant(const HomLieSuperAlgebra& a, const BilinearForm& phi) {
  std::size_t n = a.dim();
  auto pair_value = [&](const Vec& x, std::size_t j) {
    Scalar acc = 0;
    for (std::size_t s = 0; s < n; ++s)
      if (x[s] != 0) acc += x[s] * phi.gram.at(s, j);
    return acc;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // phi([e_i,e_j], e_k) vs phi(e_i, [e_j,e_k]).
        Scalar lhs = pair_value(a.bracket_basis(i, j), k);
        const Vec& right = a.bracket_basis(j, k);
        Scalar rhs = 0;
        for (std::size_t t = 0; t < n; ++t)
          if (right[t] != 0) rhs += phi.gram.at(i, t) * right[t];
        if (lhs != rhs) return false;
      }
  return true;
}

Subspace orthogonal_complement(const HomLieSuperAlgebra& a, const BilinearForm& phi,
                               const Subspace& s) {
  if (s.ambient_dim() != a.dim())
    fail(Err::AmbientMismatch, "orthogonal_complement: wrong ambient");
  if (s.dim() == 0) return Subspace::full(a.dim());
  return kernel(s.basis() * phi.gram.transposed());
}

std::pair<BilinearForm, BilinearForm> form_parity_split(const HomLieSuperAlgebra& a,
                                                        const BilinearForm& phi) {
  std::size_t n = a.dim();
  Matrix even(n, n), odd(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      (a.parity_bit_of_basis(i) == a.parity_bit_of_basis(j) ? even : odd).at(i, j) =
          phi.gram.at(i, j);
  return {form_from_gram(a, std::move(even)), form_from_gram(a, std::move(odd))};
}

}  // namespace homsuper
