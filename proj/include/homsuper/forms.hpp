#ifndef HOMSUPER_FORMS_HPP
#define HOMSUPER_FORMS_HPP

#include <utility>
#include <vector>

#include "homsuper/core_algebra.hpp"

namespace homsuper {

enum class FormParity { Even, Odd, Mixed };

const char* form_parity_name(FormParity p);

// phi(x, y) = x^T gram y over the algebra basis.
struct BilinearForm {
  Matrix gram;
  FormParity parity = FormParity::Even;
};

// Wraps a gram matrix, computing its parity from the block support. Even
// forms live on the parity-diagonal blocks, odd forms on the off-diagonal
// ones; the zero form counts as even.
BilinearForm form_from_gram(const HomLieSuperAlgebra& a, Matrix gram);

struct FormSpace {
  std::vector<BilinearForm> basis;  // canonical rref basis of the solution space
  std::size_t dimension = 0;
  std::size_t algebra_dim = 0;  // keeps the ambient n*n known when the basis is empty
};

// All gram matrices with phi([a,b],c) = phi(a,[b,c]) on basis triples. The
// constraint system decouples by total parity, so the canonical basis forms
// are parity homogeneous.
FormSpace invariant_form_space(const HomLieSuperAlgebra& a);

// The subspace of the n^2-dim coefficient space spanned by the form space.
Subspace form_space_as_subspace(const FormSpace& fs);

// K(x,y) = supertrace(adjoint(x) adjoint(y)), untwisted adjoints.
BilinearForm killing_form(const HomLieSuperAlgebra& a);
// Twisted variant str(adjoint(alpha x) adjoint(y)), exposed for comparison.
BilinearForm alpha_twisted_killing_form(const HomLieSuperAlgebra& a);

// Right radical {y : phi(x,y) = 0 for all x} = kernel of the gram matrix.
Subspace radical(const HomLieSuperAlgebra& a, const BilinearForm& phi);

bool is_nondegenerate(const HomLieSuperAlgebra& a, const BilinearForm& phi);

// gram[i][j] = (-1)^{p_i p_j} gram[j][i].
bool is_supersymmetric(const HomLieSuperAlgebra& a, const BilinearForm& phi);

// phi([a,b],c) = phi(a,[b,c]) checked on all basis triples.
bool is_invariant(const HomLieSuperAlgebra& a, const BilinearForm& phi);

// {a : phi(a, s) = 0 for all s in S}.
Subspace orthogonal_complement(const HomLieSuperAlgebra& a, const BilinearForm& phi,
                               const Subspace& s);

// (even part, odd part) by parity-block masking; the parts sum to phi.
std::pair<BilinearForm, BilinearForm> form_parity_split(const HomLieSuperAlgebra& a,
                                                        const BilinearForm& phi);

}  // namespace homsuper

#endif
