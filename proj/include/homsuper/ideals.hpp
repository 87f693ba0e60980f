#ifndef HOMSUPER_IDEALS_HPP
#define HOMSUPER_IDEALS_HPP

#include <optional>
#include <vector>

#include "homsuper/core_algebra.hpp"

namespace homsuper {

enum class IdealSide { Left, Right, TwoSided };

struct IdealSpec {
  IdealSide side = IdealSide::TwoSided;
  bool graded = false;
  bool alpha_invariant = false;
};

struct IdealReport {
  std::vector<Vec> generators;
  Subspace closure;
  IdealSpec spec;
  std::size_t closure_chain_length = 0;
};

// Smallest subspace containing the seeds and closed under bracketing with
// every basis vector on the requested side(s), parity projection when graded,
// and alpha when alpha_invariant. Iterated spinning until stable.
IdealReport ideal_closure(const HomLieSuperAlgebra& a, const std::vector<Vec>& seeds,
                          const IdealSpec& spec);

bool is_ideal(const HomLieSuperAlgebra& a, const Subspace& s, const IdealSpec& spec);

// span{[s,t] : s in S, t in T} over basis rows of S and T.
Subspace bracket_span(const HomLieSuperAlgebra& a, const Subspace& s, const Subspace& t);

// Center of the even part: {x even : [x,y]=0 for all even y}, in ambient
// coordinates.
Subspace center(const HomLieSuperAlgebra& a);

// Deterministic subspace order: dimension first, then pivot columns, then
// entry comparison of the canonical bases. A total order on canonical
// subspaces.
bool subspace_less(const Subspace& a, const Subspace& b);

// Proper nonzero graded two-sided closures of the deterministic seed family
// (basis vectors and pairwise sums), deduplicated, in seed order.
std::vector<Subspace> proper_graded_closures(const HomLieSuperAlgebra& a);

struct SimplicityCertificate {
  bool simple = false;
  bool derived_nonzero = false;
  // True when the verdict is backed by a complete enumeration of invariant
  // subspaces (distinct-eigenvalue split), not only by the seed search.
  bool exhaustive = false;
  std::optional<Subspace> witness;  // proper nonzero graded ideal when found
};

// Simple: no proper nonzero graded bracket-level ideal and [g,g] != 0.
// Seed search over homogeneous basis vectors and pair sums, then a
// completeness pass that enumerates all invariant subspaces of an operator
// with distinct rational eigenvalues drawn from the adjoint family.
SimplicityCertificate is_simple(const HomLieSuperAlgebra& a);

struct StructuralIdentities {
  bool applicable = false;          // odd part nonzero
  bool even_odd_spans_odd = false;  // [g0, g1] = g1
  bool odd_odd_spans_even = false;  // [g1, g1] = g0
  bool odd_annihilator_zero = false;
  Subspace odd_annihilator;
};

// The three subspace identities satisfied by simple algebras with nonzero
// odd part.
StructuralIdentities check_structural_identities(const HomLieSuperAlgebra& a);

struct IdealSearchResult {
  bool found = false;
  std::optional<Subspace> witness;
  std::optional<Vec> seed;
};

// Falsification search for proper nonzero one-sided non-graded ideals among
// closures of basis vectors and pair sums. Not a decision procedure.
IdealSearchResult one_sided_ideal_search(const HomLieSuperAlgebra& a);

}  // namespace homsuper

#endif
