#ifndef HOMSUPER_MODULE_THEORY_HPP
#define HOMSUPER_MODULE_THEORY_HPP

#include <optional>
#include <vector>

#include "homsuper/core_algebra.hpp"

namespace homsuper {

// A subspace together with operators on the ambient space preserving it.
struct ActionModule {
  Subspace space;
  std::vector<Matrix> operators;
};

// The odd block as a module over the even part (adjoint action).
ActionModule odd_module(const HomLieSuperAlgebra& a);
// The even block acting on itself; complete reducibility here is reductivity.
ActionModule even_adjoint_module(const HomLieSuperAlgebra& a);
// The whole space under all adjoints and the grading automorphism; its
// invariant subspaces are exactly the graded two-sided ideals.
ActionModule graded_adjoint_module(const HomLieSuperAlgebra& a);
// Same operators on an invariant subspace.
ActionModule restricted_module(const ActionModule& m, const Subspace& sub);

// Smallest invariant subspace containing the seed.
Subspace spin_submodule(const ActionModule& m, const Vec& seed);

// Minimal nonzero invariant subspaces among spins of the deterministic seed
// family (module basis vectors and pairwise sums), refined by pairwise
// intersections until stable. Sorted by subspace order.
std::vector<Subspace> minimal_submodules(const ActionModule& m);

// Invariant direct complement of w inside the module space, when one exists:
// solves for an invariant projection onto w.
std::optional<Subspace> invariant_complement(const ActionModule& m, const Subspace& w);

struct ReducibilityReport {
  bool completely_reducible = false;
  std::vector<Subspace> components;  // direct summands accumulated so far
};

// Greedy accumulation of minimal submodules; when the greedy sum stalls the
// complement solver either extends it or certifies failure, so the verdict
// is definite.
ReducibilityReport complete_reducibility(const ActionModule& m);

// Simple with completely reducible odd module.
bool is_classical(const HomLieSuperAlgebra& a);

// The adjoint module of the even part on itself is completely reducible.
bool is_reductive_even_part(const HomLieSuperAlgebra& a);

struct ComponentCountReport {
  bool applicable = false;  // classical with nonzero odd part
  std::size_t count = 0;
  bool count_in_dichotomy = false;  // count is 1 or 2
  // For two components: [m1,m1] = [m2,m2] = 0 and [m1,m2] = even part.
  bool two_component_identities_hold = false;
};

ComponentCountReport irreducible_component_count_check(const HomLieSuperAlgebra& a);

struct CenterEigenReport {
  Subspace center_space;
  Vec element;                       // acts as -1 resp. +1 on the components
  std::vector<Subspace> components;  // the two odd irreducible components
  std::vector<Scalar> eigenvalues;   // aligned with components
};

// The central element acting as -1/+1 on the two odd irreducible components.
// Requires a classical algebra with nontrivial center; HypothesisNotMet
// otherwise or when no such element exists.
CenterEigenReport center_eigen_element(const HomLieSuperAlgebra& a);

// supertrace(adjoint(e_i)) = 0 for every basis vector.
bool supertrace_zero_check(const HomLieSuperAlgebra& a);

}  // namespace homsuper

#endif
