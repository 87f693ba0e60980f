#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homsuper/exact_linalg.hpp"

namespace homsuper {

enum class Parity { Even, Odd };

inline int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }
inline Parity parity_from_bit(int b) { return (b % 2) ? Parity::Odd : Parity::Even; }
inline const char* parity_name(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

struct JacobiWitness {
  std::size_t i = 0, j = 0, k = 0;
  Vec defect;  // value of the twisted Jacobi sum on (e_i, e_j, e_k); nonzero
};

struct VerificationReport {
  bool skew_ok = false;
  bool hom_jacobi_ok = false;
  std::optional<JacobiWitness> hom_jacobi_witness;
  bool multiplicative = false;
  bool regular = false;
  bool is_hom_lie_superalgebra = false;  // skew + twisted Jacobi
  bool is_lie_superalgebra = false;      // skew + Jacobi re-evaluated with the identity twist
};

// Finite-dimensional Z/2-graded algebra over Q: basis is the even block
// followed by the odd block, the bracket is given by structure constants
// c[i][j] = coordinates of [e_i, e_j], and alpha is the twisting map.
// Construction enforces: degree-zero bracket, degree-zero (block-diagonal)
// alpha, and super skew-symmetry c[i][j] = -(-1)^{p_i p_j} c[j][i].
// The twisted Jacobi identity is NOT enforced here; verify() checks it.
class HomLieSuperAlgebra {
 public:
  HomLieSuperAlgebra(std::string name, std::vector<std::string> basis_names,
                     std::size_t even_dim, std::vector<std::vector<Vec>> structure,
                     Matrix alpha);

  static HomLieSuperAlgebra abelian(std::size_t even_dim, std::size_t odd_dim,
                                    const std::string& name = "abelian");

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_names_.size(); }
  std::size_t even_dim() const { return even_dim_; }
  std::size_t odd_dim() const { return dim() - even_dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::string& basis_name(std::size_t i) const { return basis_names_[i]; }
  std::optional<std::size_t> basis_index(const std::string& basis_name) const;
  Parity basis_parity(std::size_t i) const { return i < even_dim_ ? Parity::Even : Parity::Odd; }
  int parity_bit_of_basis(std::size_t i) const { return parity_bit(basis_parity(i)); }
  const Matrix& alpha() const { return alpha_; }

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return structure_[i][j]; }
  // Bilinear extension of the table.
  Vec bracket(const Vec& x, const Vec& y) const;

  // Matrix of y -> [x, y].
  Matrix adjoint(const Vec& x) const;
  // Matrix of y -> [y, w].
  Matrix right_bracket_matrix(const Vec& w) const;

  // diag(+1 on the even block, -1 on the odd block).
  Matrix grading_automorphism() const;
  // Trace weighted by the grading automorphism.
  Scalar supertrace(const Matrix& m) const;

  // alpha^k; negative k requires invertible alpha (NotInvertible otherwise).
  Matrix alpha_power(long k) const;
  // ker(alpha - id); its echelon basis vectors are homogeneous because the
  // fixed space of a degree-zero map is graded.
  Subspace alpha_fixed_subspace() const;

  Subspace derived_subalgebra() const;  // span of all c[i][j]
  Subspace even_part() const;
  Subspace odd_part() const;
  Vec parity_component(const Vec& v, Parity p) const;
  // True iff v lies in a single parity block; reports which one (zero counts as even).
  bool is_homogeneous(const Vec& v, Parity* out = nullptr) const;

  // Twisted adjoint of an alpha-fixed x: on homogeneous pieces,
  // ad_k(x)(y) = (-1)^{|x||y|} [alpha^k(y), x], extended linearly in x.
  // The parity sign is what makes this a derivation for odd x; it is
  // invisible when x is even.
  Matrix ad_k(const Vec& x, long k) const;

  bool check_super_skew() const;
  bool check_degree_zero() const;
  // First violating basis triple (i, j, k) in lexicographic order, if any.
  std::optional<JacobiWitness> check_hom_jacobi() const;
  std::optional<JacobiWitness> jacobi_witness_with_twist(const Matrix& twist) const;
  bool check_multiplicative() const;
  bool check_alpha_invertible() const;
  bool check_regular() const;

  HomLieSuperAlgebra with_alpha(Matrix new_alpha, const std::string& new_name) const;
  HomLieSuperAlgebra renamed(const std::string& new_name) const;

  bool operator==(const HomLieSuperAlgebra& other) const = default;

 private:
  void validate() const;

  std::string name_;
  std::vector<std::string> basis_names_;
  std::size_t even_dim_ = 0;
  std::vector<std::vector<Vec>> structure_;
  Matrix alpha_;
};

VerificationReport verify(const HomLieSuperAlgebra& a);

// bracket'(x, y) = sigma([x, y]) with twist sigma. Requires the input twist
// to be the identity (HypothesisNotMet) and sigma to be an invertible
// degree-zero automorphism of the bracket (NotAutomorphism). The result is
// multiplicative and satisfies the twisted Jacobi identity by construction;
// both are re-verified before returning.
HomLieSuperAlgebra yau_twist(const HomLieSuperAlgebra& a, const Matrix& sigma,
                             const std::string& new_name);

}  // namespace homsuper
