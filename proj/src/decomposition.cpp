#include "homsuper/decomposition.hpp"

#include <algorithm>
#include <utility>

#include "homsuper/module_theory.hpp"

namespace homsuper {

DirectSum direct_sum(const std::vector<HomLieSuperAlgebra>& parts, const std::string& name) {
  if (parts.empty()) fail(Err::HypothesisNotMet, "direct_sum: empty part list");
  if (parts.size() == 1) {
    const HomLieSuperAlgebra& p = parts[0];
    return DirectSum{name.empty() ? p : p.renamed(name), {Subspace::full(p.dim())}};
  }
  std::size_t even_total = 0, total = 0;
  for (const HomLieSuperAlgebra& p : parts) {
    even_total += p.even_dim();
    total += p.dim();
  }
  // Global slot of local vector l of part r: even slots first, then odd.
  std::vector<std::vector<std::size_t>> slot(parts.size());
  std::size_t even_off = 0, odd_off = even_total;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const HomLieSuperAlgebra& p = parts[r];
    slot[r].resize(p.dim());
    for (std::size_t l = 0; l < p.dim(); ++l)
      slot[r][l] = l < p.even_dim() ? even_off + l : odd_off + (l - p.even_dim());
    even_off += p.even_dim();
    odd_off += p.odd_dim();
  }
  std::vector<std::string> names(total);
  Matrix alpha = Matrix::zero(total, total);
  std::vector<std::vector<Vec>> structure(total, std::vector<Vec>(total, zero_vec(total)));
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const HomLieSuperAlgebra& p = parts[r];
    std::string prefix = "p" + std::to_string(r + 1) + ".";
    for (std::size_t l = 0; l < p.dim(); ++l) names[slot[r][l]] = prefix + p.basis_name(l);
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j) {
        alpha.at(slot[r][i], slot[r][j]) = p.alpha().at(i, j);
        const Vec& c = p.bracket_basis(i, j);
        Vec& target = structure[slot[r][i]][slot[r][j]];
        for (std::size_t l = 0; l < p.dim(); ++l) target[slot[r][l]] = c[l];
      }
  }
  std::string sum_name = name;
  if (sum_name.empty())
    for (std::size_t r = 0; r < parts.size(); ++r)
      sum_name += (r ? "+" : "") + parts[r].name();
  DirectSum out{HomLieSuperAlgebra(sum_name, names, even_total, structure, alpha), {}};
  for (std::size_t r = 0; r < parts.size(); ++r) {
    std::vector<Vec> gens;
    for (std::size_t l = 0; l < parts[r].dim(); ++l) gens.push_back(unit_vec(total, slot[r][l]));
    out.blocks.push_back(Subspace::span(total, gens));
  }
  return out;
}

InducedSubalgebra induced_subalgebra(const HomLieSuperAlgebra& a, const Subspace& s,
                                     const std::string& name) {
  std::size_t n = a.dim(), m = s.dim();
  if (s.ambient_dim() != n) fail(Err::AmbientMismatch, "induced_subalgebra: ambient mismatch");
  // Canonical rows of a graded subspace are parity homogeneous because the
  // parity blocks occupy disjoint coordinate ranges.
  std::vector<std::size_t> order;
  std::size_t even_count = 0;
  {
    std::vector<std::size_t> evens, odds;
    for (std::size_t r = 0; r < m; ++r) {
      Parity p = Parity::Even;
      if (!a.is_homogeneous(s.basis_vector(r), &p))
        fail(Err::HypothesisNotMet, "induced_subalgebra: subspace is not graded");
      (p == Parity::Even ? evens : odds).push_back(r);
    }
    even_count = evens.size();
    order = std::move(evens);
    order.insert(order.end(), odds.begin(), odds.end());
  }
  Matrix embedding(m, n);
  for (std::size_t r = 0; r < m; ++r) embedding.set_row(r, s.basis_vector(order[r]));

  // Coefficients in the reordered basis; the canonical coordinates come back
  // in row order.
  auto coords = [&](const Vec& v, const char* closed_under) {
    std::optional<Vec> c = s.coordinates_of(v);
    if (!c)
      fail(Err::HypothesisNotMet,
           std::string("induced_subalgebra: subspace is not closed under ") + closed_under);
    Vec out = zero_vec(m);
    for (std::size_t r = 0; r < m; ++r) out[r] = (*c)[order[r]];
    return out;
  };

  Matrix alpha_new(m, m);
  for (std::size_t r = 0; r < m; ++r)
    alpha_new.set_col(r, coords(a.alpha().apply(embedding.row(r)), "alpha"));
  std::vector<std::vector<Vec>> structure(m, std::vector<Vec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      structure[i][j] = coords(a.bracket(embedding.row(i), embedding.row(j)), "bracket");

  std::vector<std::string> names(m);
  for (std::size_t r = 0; r < m; ++r) {
    std::optional<std::size_t> unit;
    bool is_unit = true;
    for (std::size_t c = 0; c < n && is_unit; ++c) {
      const Scalar& v = embedding.at(r, c);
      if (v == 0) continue;
      if (v != 1 || unit) is_unit = false;
      else unit = c;
    }
    names[r] = is_unit && unit ? a.basis_name(*unit) : "b" + std::to_string(r);
  }
  std::vector<std::string> dedup = names;
  std::sort(dedup.begin(), dedup.end());
  if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
    for (std::size_t r = 0; r < m; ++r) names[r] = "b" + std::to_string(r);

  std::string sub_name = name.empty() ? a.name() + ".sub" : name;
  return InducedSubalgebra{
      HomLieSuperAlgebra(sub_name, names, even_count, structure, alpha_new), embedding};
}

CommutativeIdealReport has_commutative_graded_ideal(const HomLieSuperAlgebra& a) {
  CommutativeIdealReport rep;
  std::size_t n = a.dim();
  if (n == 0) return rep;
  if (a.derived_subalgebra().is_zero()) {
    rep.found = true;
    rep.witness = Subspace::full(n);
    return rep;
  }
  // The center is a commutative graded ideal whenever it is nonzero.
  Matrix stacked(0, n);
  for (std::size_t j = 0; j < n; ++j)
    stacked = Matrix::vstack(stacked, a.right_bracket_matrix(unit_vec(n, j)));
  Subspace full_center = kernel(stacked);
  if (!full_center.is_zero()) {
    rep.found = true;
    rep.witness = full_center;
    return rep;
  }
  for (const Subspace& c : proper_graded_closures(a))
    if (bracket_span(a, c, c).is_zero()) {
      rep.found = true;
      rep.witness = c;
      return rep;
    }
  for (const Subspace& i : minimal_submodules(graded_adjoint_module(a)))
    if (bracket_span(a, i, i).is_zero()) {
      rep.found = true;
      rep.witness = i;
      return rep;
    }
  return rep;
}

namespace {

// c itself when alpha-closed, its proper alpha-invariant closure otherwise.
std::optional<Subspace> alpha_closed_proper(const HomLieSuperAlgebra& a, const Subspace& c) {
  bool closed = true;
  for (std::size_t r = 0; r < c.dim() && closed; ++r)
    closed = c.contains(a.alpha().apply(c.basis_vector(r)));
  if (closed) return c;
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < c.dim(); ++r) gens.push_back(c.basis_vector(r));
  IdealSpec spec{IdealSide::TwoSided, true, true};
  Subspace grown = ideal_closure(a, gens, spec).closure;
  if (!grown.is_full()) return grown;
  return std::nullopt;
}

// Smallest proper nonzero graded alpha-closed ideal reachable from the
// deterministic seed family, smallest candidates first.
std::optional<Subspace> splitting_ideal(const HomLieSuperAlgebra& a) {
  std::vector<Subspace> cands = proper_graded_closures(a);
  Subspace derived = a.derived_subalgebra();
  if (!derived.is_zero() && !derived.is_full() &&
      std::find(cands.begin(), cands.end(), derived) == cands.end())
    cands.push_back(derived);
  std::sort(cands.begin(), cands.end(), subspace_less);
  for (const Subspace& c : cands)
    if (std::optional<Subspace> usable = alpha_closed_proper(a, c)) return usable;
  return std::nullopt;
}

void split_recursive(const HomLieSuperAlgebra& cur, const Matrix& embed, const BilinearForm& phi,
                     bool invariant, std::vector<Subspace>& out) {
  if (cur.dim() == 0) return;
  if (cur.derived_subalgebra().is_zero())
    fail(Err::CommutativeIdealPresent, "decompose: commutative summand " + cur.name());
  std::optional<Subspace> j = splitting_ideal(cur);
  if (!j) {
    SimplicityCertificate cert = is_simple(cur);
    if (cert.simple) {
      out.push_back(Subspace::row_space(embed));
      return;
    }
    // The completeness pass found an ideal the seed family missed.
    if (cert.witness) j = alpha_closed_proper(cur, *cert.witness);
    if (!j) fail(Err::HypothesisNotMet, "decompose: no splitting ideal found in " + cur.name());
  }
  Subspace comp = orthogonal_complement(cur, phi, *j);
  if (j->dim() + comp.dim() != cur.dim() || !j->intersect(comp).is_zero()) {
    if (!invariant)
      fail(Err::NotInvariant, "decompose: splitting failed and the form is not invariant");
    fail(Err::DegenerateForm, "decompose: the form restricted to a minimal ideal is degenerate");
  }
  auto recurse = [&](const Subspace& w) {
    InducedSubalgebra ind = [&] {
      try {
        return induced_subalgebra(cur, w);
      } catch (const Error&) {
        if (!invariant)
          fail(Err::NotInvariant, "decompose: orthogonal complement is not a subalgebra");
        throw;
      }
    }();
    const Matrix& b = ind.embedding;
    BilinearForm sub = form_from_gram(ind.algebra, b * phi.gram * b.transposed());
    split_recursive(ind.algebra, b * embed, sub, invariant, out);
  };
  recurse(*j);
  recurse(comp);
}

}  // namespace

Decomposition decompose(const HomLieSuperAlgebra& a, const BilinearForm& phi,
                        bool strict_invariant) {
  std::size_t n = a.dim();
  if (phi.gram.rows() != n || phi.gram.cols() != n)
    fail(Err::AmbientMismatch, "decompose: form size does not match the algebra");
  if (phi.parity == FormParity::Mixed)
    fail(Err::HypothesisNotMet, "decompose: form is not parity homogeneous");
  // The structural obstruction outranks the form: a commutative ideal rules
  // out every form, degenerate or not.
  CommutativeIdealReport comm = has_commutative_graded_ideal(a);
  if (comm.found)
    fail(Err::CommutativeIdealPresent, "decompose: commutative graded ideal of dimension " +
                                           std::to_string(comm.witness->dim()));
  if (!is_nondegenerate(a, phi)) fail(Err::DegenerateForm, "decompose: form is degenerate");
  Decomposition out;
  out.form_used = phi;
  out.form_invariant = is_invariant(a, phi);
  if (strict_invariant && !out.form_invariant)
    fail(Err::NotInvariant, "decompose: form is not invariant");
  std::vector<Subspace> spaces;
  split_recursive(a, Matrix::identity(n), phi, out.form_invariant, spaces);
  std::sort(spaces.begin(), spaces.end(), subspace_less);
  for (std::size_t r = 0; r < spaces.size(); ++r) {
    InducedSubalgebra ind =
        induced_subalgebra(a, spaces[r], a.name() + ".g" + std::to_string(r + 1));
    out.summands.push_back(Summand{spaces[r], std::move(ind.algebra), std::move(ind.embedding)});
  }
  out.pairwise_orthogonal = true;
  out.pairwise_bracket_zero = true;
  for (std::size_t r = 0; r < out.summands.size(); ++r)
    for (std::size_t t = r + 1; t < out.summands.size(); ++t) {
      const Summand& x = out.summands[r];
      const Summand& y = out.summands[t];
      if (!(x.embedding * phi.gram * y.embedding.transposed()).is_zero() ||
          !(y.embedding * phi.gram * x.embedding.transposed()).is_zero())
        out.pairwise_orthogonal = false;
      if (!bracket_span(a, x.space, y.space).is_zero() ||
          !bracket_span(a, y.space, x.space).is_zero())
        out.pairwise_bracket_zero = false;
    }
  return out;
}

KillingCriterionReport killing_nondegenerate_criterion(const HomLieSuperAlgebra& a) {
  KillingCriterionReport rep;
  rep.killing = killing_form(a);
  rep.killing_nondegenerate = is_nondegenerate(a, rep.killing);
  rep.commutative_ideal = has_commutative_graded_ideal(a);
  rep.applicable = rep.killing_nondegenerate;
  if (!rep.applicable) {
    rep.consistent = true;
    rep.note = "degenerate Killing form; the criterion makes no claim";
    return rep;
  }
  if (rep.commutative_ideal.found) {
    rep.consistent = false;
    rep.note = "nondegenerate Killing form next to a commutative graded ideal";
    return rep;
  }
  try {
    rep.decomposition = decompose(a, rep.killing);
  } catch (const Error& e) {
    rep.consistent = false;
    rep.note = e.what();
    return rep;
  }
  rep.all_simple = true;
  rep.all_classical = true;
  rep.all_restrictions_nondegenerate = true;
  for (const Summand& s : rep.decomposition->summands) {
    SummandVerdict v;
    v.dimension = s.space.dim();
    v.simple = is_simple(s.algebra).simple;
    v.classical = is_classical(s.algebra);
    v.restricted_killing_nondegenerate = is_nondegenerate(s.algebra, killing_form(s.algebra));
    rep.all_simple = rep.all_simple && v.simple;
    rep.all_classical = rep.all_classical && v.classical;
    rep.all_restrictions_nondegenerate =
        rep.all_restrictions_nondegenerate && v.restricted_killing_nondegenerate;
    rep.summands.push_back(v);
  }
  rep.consistent =
      rep.all_simple && rep.all_classical && rep.all_restrictions_nondegenerate;
  if (rep.consistent)
    rep.note = "direct sum of classical simple summands with nondegenerate Killing forms";
  return rep;
}

bool one_sided_ideals_are_block_sums(const HomLieSuperAlgebra& a, const Decomposition& d) {
  std::size_t n = a.dim(), t = d.summands.size();
  if (t >= 16) fail(Err::HypothesisNotMet, "one_sided_ideals_are_block_sums: too many summands");
  std::vector<Subspace> block_sums;
  for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
    Subspace s = Subspace::zero(n);
    for (std::size_t r = 0; r < t; ++r)
      if (mask & (std::size_t{1} << r)) s = s.sum(d.summands[r].space);
    block_sums.push_back(s);
  }
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(unit_vec(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      seeds.push_back(vec_add(unit_vec(n, i), unit_vec(n, j)));
  for (IdealSide side : {IdealSide::Left, IdealSide::Right}) {
    IdealSpec spec{side, false, false};
    for (const Vec& s : seeds) {
      Subspace c = ideal_closure(a, {s}, spec).closure;
      if (std::find(block_sums.begin(), block_sums.end(), c) == block_sums.end()) return false;
    }
  }
  return true;
}

}  // namespace homsuper
