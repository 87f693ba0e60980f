#ifndef HOMSUPER_DECOMPOSITION_HPP
#define HOMSUPER_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "homsuper/forms.hpp"
#include "homsuper/ideals.hpp"

namespace homsuper {

// Block-diagonal union of algebras: even blocks of every part first, then
// odd blocks, names prefixed "p{r}.". Each part embeds as a graded ideal;
// blocks records where, in input order. A single part passes through
// unchanged.
struct DirectSum {
  HomLieSuperAlgebra algebra;
  std::vector<Subspace> blocks;
};

DirectSum direct_sum(const std::vector<HomLieSuperAlgebra>& parts,
                     const std::string& name = "");

// Structure induced on a graded, alpha-closed, bracket-closed subspace. The
// new basis is the canonical one with even rows first; rows that are ambient
// unit vectors keep their names, the rest are numbered. embedding row r is
// the image of the new basis vector r in ambient coordinates.
struct InducedSubalgebra {
  HomLieSuperAlgebra algebra;
  Matrix embedding;
};

InducedSubalgebra induced_subalgebra(const HomLieSuperAlgebra& a, const Subspace& s,
                                     const std::string& name = "");

struct CommutativeIdealReport {
  bool found = false;
  std::optional<Subspace> witness;
};

// Nonzero graded ideal I with [I,I] = 0. Checks the center, then every
// deterministic seed closure, then the minimal invariant subspaces of the
// adjoint action; complete at this scale because every minimal graded ideal
// is a minimal adjoint submodule.
CommutativeIdealReport has_commutative_graded_ideal(const HomLieSuperAlgebra& a);

struct Summand {
  Subspace space;
  HomLieSuperAlgebra algebra;
  Matrix embedding;
};

struct Decomposition {
  std::vector<Summand> summands;
  bool pairwise_orthogonal = false;
  bool pairwise_bracket_zero = false;
  bool form_invariant = false;
  BilinearForm form_used;
};

// Orthogonal splitting along smallest graded ideals, recursing on the
// complement with the restricted form, until every summand is simple.
// Requires a parity-homogeneous nondegenerate form and no commutative graded
// ideal. Invariance of the form is recorded rather than required, because a
// block-diagonal form can split the algebra without being invariant; a
// failed split on a non-invariant form raises NotInvariant, and
// strict_invariant promotes the recorded check to a precondition.
Decomposition decompose(const HomLieSuperAlgebra& a, const BilinearForm& phi,
                        bool strict_invariant = false);

struct SummandVerdict {
  std::size_t dimension = 0;
  bool simple = false;
  bool classical = false;
  bool restricted_killing_nondegenerate = false;
};

// Killing-form criterion: a nondegenerate Killing form forces a direct sum
// of classical simple summands whose restricted Killing forms are again
// nondegenerate. A degenerate Killing form makes no claim, so the report is
// consistent by default.
struct KillingCriterionReport {
  BilinearForm killing;
  bool killing_nondegenerate = false;
  CommutativeIdealReport commutative_ideal;
  bool applicable = false;
  std::optional<Decomposition> decomposition;
  std::vector<SummandVerdict> summands;
  bool all_simple = false;
  bool all_classical = false;
  bool all_restrictions_nondegenerate = false;
  bool consistent = false;
  std::string note;
};

KillingCriterionReport killing_nondegenerate_criterion(const HomLieSuperAlgebra& a);

// Falsification pass: every left and right closure of the deterministic
// seed family must equal a sum of decomposition summands. Not a decision
// procedure; one-sided ideals cannot be enumerated.
bool one_sided_ideals_are_block_sums(const HomLieSuperAlgebra& a, const Decomposition& d);

}  // namespace homsuper

#endif
