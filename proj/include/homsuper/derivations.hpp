#ifndef HOMSUPER_DERIVATIONS_HPP
#define HOMSUPER_DERIVATIONS_HPP

#include <vector>

#include "homsuper/core_algebra.hpp"

namespace homsuper {

// Solutions D of D alpha = alpha D and the parity-d twisted Leibniz rule
// D[x,y] = [Dx, alpha^k y] + (-1)^{d|x|}[alpha^k x, Dy], as matrices.
struct DerivationSpace {
  long k = 0;
  Parity parity = Parity::Even;
  std::vector<Matrix> basis;     // canonical basis of the solution space
  std::size_t dimension = 0;
  Subspace solution_space;       // the same space inside the n^2 coefficient space
  Subspace inner_space;          // inner maps of this parity
  bool inner_contained = false;  // inner_space inside solution_space
  bool multiplicative_input = true;
};

// Negative k requires a regular algebra (NegativePowerNonRegular otherwise).
DerivationSpace derivation_space(const HomLieSuperAlgebra& a, long k, Parity d);

// Span of y -> (-1)^{|x||y|}[alpha^{k-1}(y), x] over a homogeneous basis of
// the alpha-fixed subspace; the twisted adjoints of alpha-fixed elements.
// Whole span, or only the generators of one parity.
Subspace inner_derivation_space(const HomLieSuperAlgebra& a, long k);
Subspace inner_derivation_space(const HomLieSuperAlgebra& a, long k, Parity d);

// Every parity-homogeneous derivation is inner. Requires nondegenerate
// Killing form (HypothesisNotMet otherwise).
bool check_inner_when_killing_nondegenerate(const HomLieSuperAlgebra& a, long k);

// The twisted adjoint of an alpha-fixed x lands in the k+1 derivation space.
bool check_ad_is_derivation(const HomLieSuperAlgebra& a, const Vec& x, long k);

}  // namespace homsuper

#endif
