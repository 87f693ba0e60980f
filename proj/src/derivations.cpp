#include "homsuper/derivations.hpp"

#include "homsuper/forms.hpp"

namespace homsuper {

namespace {

Matrix alpha_power_checked(const HomLieSuperAlgebra& a, long k) {
  if (k < 0 && !a.check_regular())
    fail(Err::NegativePowerNonRegular,
         "negative twist power needs a regular algebra (power " + std::to_string(k) + ")");
  return a.alpha_power(k);
}

}  // namespace

DerivationSpace derivation_space(const HomLieSuperAlgebra& a, long k, Parity d) {
  std::size_t n = a.dim();
  Matrix ak = alpha_power_checked(a, k);
  Matrix ident = Matrix::identity(n);
  int dbit = parity_bit(d);

  std::vector<Matrix> blocks;
  // Commutation with the twist.
  blocks.push_back(ident.kronecker(a.alpha().transposed()) - a.alpha().kronecker(ident));
  // Twisted Leibniz rule on every basis pair.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ei(n, 1);
    ei.at(i, 0) = 1;
    Matrix l_i = a.adjoint(ak.col(i));
    for (std::size_t j = 0; j < n; ++j) {
      Matrix ej(n, 1);
      ej.at(j, 0) = 1;
      Matrix cij(n, 1);
      for (std::size_t t = 0; t < n; ++t) cij.at(t, 0) = a.bracket_basis(i, j)[t];
      Matrix r_j = a.right_bracket_matrix(ak.col(j));
      Matrix term = ident.kronecker(cij.transposed()) - r_j.kronecker(ei.transposed());
      Matrix last = l_i.kronecker(ej.transposed());
      if (dbit * a.parity_bit_of_basis(i)) term = term + last;
      else term = term - last;
      blocks.push_back(std::move(term));
    }
  }
  // Parity constraint: entries outside the degree-d block pattern vanish.
  std::vector<Vec> parity_rows;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a.parity_bit_of_basis(r) != (a.parity_bit_of_basis(c) + dbit) % 2)
        parity_rows.push_back(unit_vec(n * n, r * n + c));
  if (!parity_rows.empty()) blocks.push_back(Matrix::from_rows(parity_rows));

  Matrix sys = blocks[0];
  for (std::size_t b = 1; b < blocks.size(); ++b) sys = Matrix::vstack(sys, blocks[b]);

  DerivationSpace out;
  out.k = k;
  out.parity = d;
  out.solution_space = kernel(sys);
  out.dimension = out.solution_space.dim();
  for (std::size_t r = 0; r < out.dimension; ++r)
    out.basis.push_back(Matrix::from_vec_rm(out.solution_space.basis_vector(r), n, n));
  // The inner span needs alpha^{k-1}; when that power does not exist the
  // solution space is still well defined and the inner space is recorded empty.
  if (k >= 1 || a.check_regular())
    out.inner_space = inner_derivation_space(a, k, d);
  else
    out.inner_space = Subspace::zero(n * n);
  out.inner_contained = out.solution_space.contains(out.inner_space);
  out.multiplicative_input = a.check_multiplicative();
  return out;
}

namespace {

Subspace inner_span(const HomLieSuperAlgebra& a, long k, const Parity* only) {
  std::size_t n = a.dim();
  if (k <= 0 && !a.check_regular())
    fail(Err::NegativePowerNonRegular,
         "inner derivations at power " + std::to_string(k) + " need a regular algebra");
  Subspace fixed = a.alpha_fixed_subspace();
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < fixed.dim(); ++r) {
    Vec x = fixed.basis_vector(r);
    Parity p;
    // Basis rows of a graded subspace are homogeneous.
    if (!a.is_homogeneous(x, &p)) fail(Err::InvalidAlgebra, "fixed subspace basis not graded");
    if (only && p != *only) continue;
    gens.push_back(a.ad_k(x, k - 1).vec_rm());
  }
  return Subspace::span(n * n, gens);
}

}  // namespace

Subspace inner_derivation_space(const HomLieSuperAlgebra& a, long k) {
  return inner_span(a, k, nullptr);
}

Subspace inner_derivation_space(const HomLieSuperAlgebra& a, long k, Parity d) {
  return inner_span(a, k, &d);
}

bool check_inner_when_killing_nondegenerate(const HomLieSuperAlgebra& a, long k) {
  if (!is_nondegenerate(a, killing_form(a)))
    fail(Err::HypothesisNotMet, "check_inner needs a nondegenerate Killing form");
  Subspace inner = inner_derivation_space(a, k);
  return inner.contains(derivation_space(a, k, Parity::Even).solution_space) &&
         inner.contains(derivation_space(a, k, Parity::Odd).solution_space);
}

bool check_ad_is_derivation(const HomLieSuperAlgebra& a, const Vec& x, long k) {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Vec xp = a.parity_component(x, p);
    if (vec_is_zero(xp)) continue;
    Matrix d = a.ad_k(xp, k);
    if (!derivation_space(a, k + 1, p).solution_space.contains(d.vec_rm())) return false;
  }
  return true;
}

}  // namespace homsuper
