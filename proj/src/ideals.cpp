#include "homsuper/ideals.hpp"

#include <algorithm>

namespace homsuper {

namespace {

// Adds v, split into parity components when graded.
bool absorb(const HomLieSuperAlgebra& a, IncrementalRref& r, const Vec& v, bool graded) {
  if (!graded) return r.add(v);
  bool grew = r.add(a.parity_component(v, Parity::Even));
  grew = r.add(a.parity_component(v, Parity::Odd)) || grew;
  return grew;
}

}  // namespace

IdealReport ideal_closure(const HomLieSuperAlgebra& a, const std::vector<Vec>& seeds,
                          const IdealSpec& spec) {
  std::size_t n = a.dim();
  IncrementalRref r(n);
  for (const Vec& s : seeds) {
    if (s.size() != n) fail(Err::AmbientMismatch, "ideal_closure: seed has wrong length");
    absorb(a, r, s, spec.graded);
  }
  std::size_t chain = 0;
  for (;;) {
    bool grew = false;
    Matrix snapshot = r.to_subspace().basis();
    for (std::size_t w = 0; w < snapshot.rows(); ++w) {
      Vec row = snapshot.row(w);
      for (std::size_t i = 0; i < n; ++i) {
        Vec e = unit_vec(n, i);
        if (spec.side != IdealSide::Right) grew |= absorb(a, r, a.bracket(e, row), spec.graded);
        if (spec.side != IdealSide::Left) grew |= absorb(a, r, a.bracket(row, e), spec.graded);
      }
      if (spec.alpha_invariant) grew |= absorb(a, r, a.alpha().apply(row), spec.graded);
    }
    if (!grew) break;
    ++chain;
  }
  IdealReport rep;
  rep.generators = seeds;
  rep.closure = r.to_subspace();
  rep.spec = spec;
  rep.closure_chain_length = chain;
  return rep;
}

bool is_ideal(const HomLieSuperAlgebra& a, const Subspace& s, const IdealSpec& spec) {
  std::size_t n = a.dim();
  if (s.ambient_dim() != n) fail(Err::AmbientMismatch, "is_ideal: wrong ambient dimension");
  for (std::size_t w = 0; w < s.dim(); ++w) {
    Vec row = s.basis_vector(w);
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = unit_vec(n, i);
      if (spec.side != IdealSide::Right && !s.contains(a.bracket(e, row))) return false;
      if (spec.side != IdealSide::Left && !s.contains(a.bracket(row, e))) return false;
    }
    if (spec.graded && !s.contains(a.parity_component(row, Parity::Even))) return false;
    if (spec.alpha_invariant && !s.contains(a.alpha().apply(row))) return false;
  }
  return true;
}

Subspace bracket_span(const HomLieSuperAlgebra& a, const Subspace& s, const Subspace& t) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      gens.push_back(a.bracket(s.basis_vector(i), t.basis_vector(j)));
  return Subspace::span(a.dim(), gens);
}

Subspace center(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim(), m = a.even_dim();
  // Unknown x in the even block; one n-row block of conditions per even y.
  Matrix cond(n * m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const Vec& br = a.bracket_basis(i, j);
      for (std::size_t t = 0; t < n; ++t) cond.at(j * n + t, i) = br[t];
    }
  Subspace small = kernel(cond);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < small.dim(); ++r) {
    Vec v = zero_vec(n);
    for (std::size_t i = 0; i < m; ++i) v[i] = small.basis_vector(r)[i];
    gens.push_back(v);
  }
  return Subspace::span(n, gens);
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
      int cmp_rc = cmp(a.basis().at(r, c), b.basis().at(r, c));
      if (cmp_rc != 0) return cmp_rc < 0;
    }
  return false;
}

// Proper nonzero graded two-sided closures from the deterministic seed family.
std::vector<Subspace> proper_graded_closures(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  IdealSpec spec{IdealSide::TwoSided, true, false};
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(unit_vec(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) seeds.push_back(vec_add(unit_vec(n, i), unit_vec(n, j)));
  std::vector<Subspace> found;
  for (const Vec& s : seeds) {
    Subspace c = ideal_closure(a, {s}, spec).closure;
    if (!c.is_zero() && !c.is_full() &&
        std::find(found.begin(), found.end(), c) == found.end())
      found.push_back(c);
  }
  return found;
}

namespace {

// An operator with n distinct rational eigenvalues under which every graded
// two-sided ideal is invariant, together with its eigenvector lines.
std::optional<std::vector<Vec>> eigen_split_lines(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  Matrix kappa = a.grading_automorphism();
  std::vector<Matrix> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad = a.adjoint(unit_vec(n, i));
    candidates.push_back(ad);
    for (long c : {1, 2, 3, 5, 7, 11}) candidates.push_back(ad + kappa.scaled(Scalar(c)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix s = a.adjoint(unit_vec(n, i)) + a.adjoint(unit_vec(n, j));
      candidates.push_back(s);
      for (long c : {1, 3}) candidates.push_back(s + kappa.scaled(Scalar(c)));
    }
  for (const Matrix& t : candidates) {
    auto eig = distinct_rational_eigenvalues(t);
    if (!eig) continue;
    std::vector<Vec> lines;
    bool ok = true;
    for (const Scalar& lambda : *eig) {
      Subspace es = kernel(t - Matrix::identity(n).scaled(lambda));
      if (es.dim() != 1) {
        ok = false;
        break;
      }
      lines.push_back(es.basis_vector(0));
    }
    if (ok) return lines;
  }
  return std::nullopt;
}

}  // namespace

SimplicityCertificate is_simple(const HomLieSuperAlgebra& a) {
  SimplicityCertificate cert;
  Subspace derived = a.derived_subalgebra();
  cert.derived_nonzero = !derived.is_zero();
  if (!cert.derived_nonzero) {
    cert.simple = false;
    cert.exhaustive = true;
    return cert;
  }
  std::vector<Subspace> proper = proper_graded_closures(a);
  if (!derived.is_full()) proper.push_back(derived);
  if (!proper.empty()) {
    cert.simple = false;
    cert.exhaustive = true;
    Subspace best = proper[0];
    for (const Subspace& s : proper)
      if (subspace_less(s, best)) best = s;
    cert.witness = best;
    return cert;
  }
  cert.simple = true;
  // Completeness: with a distinct-eigenvalue operator every invariant
  // subspace is spanned by a subset of its eigenlines.
  std::size_t n = a.dim();
  if (n <= 12) {
    auto lines = eigen_split_lines(a);
    if (lines) {
      cert.exhaustive = true;
      IdealSpec spec{IdealSide::TwoSided, true, false};
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::size_t{1} << i)) gens.push_back((*lines)[i]);
        Subspace w = Subspace::span(n, gens);
        if (w.dim() == gens.size() && !w.is_full() && is_ideal(a, w, spec)) {
          cert.simple = false;
          cert.witness = w;
          return cert;
        }
      }
    }
  }
  return cert;
}

StructuralIdentities check_structural_identities(const HomLieSuperAlgebra& a) {
  StructuralIdentities rep;
  rep.applicable = a.odd_dim() > 0;
  Subspace g0 = a.even_part(), g1 = a.odd_part();
  rep.even_odd_spans_odd = bracket_span(a, g0, g1) == g1;
  rep.odd_odd_spans_even = bracket_span(a, g1, g1) == g0;
  // Ann(g1) = {x : [x, e_j] = 0 for all odd e_j}, a kernel over the whole space.
  std::size_t n = a.dim();
  Matrix cond(n * a.odd_dim(), n);
  for (std::size_t j = 0; j < a.odd_dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& br = a.bracket_basis(i, a.even_dim() + j);
      for (std::size_t t = 0; t < n; ++t) cond.at(j * n + t, i) = br[t];
    }
  rep.odd_annihilator = kernel(cond);
  rep.odd_annihilator_zero = rep.odd_annihilator.is_zero();
  return rep;
}

IdealSearchResult one_sided_ideal_search(const HomLieSuperAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(unit_vec(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) seeds.push_back(vec_add(unit_vec(n, i), unit_vec(n, j)));
  IdealSearchResult res;
  for (IdealSide side : {IdealSide::Left, IdealSide::Right}) {
    IdealSpec spec{side, false, false};
    for (const Vec& s : seeds) {
      Subspace c = ideal_closure(a, {s}, spec).closure;
      if (c.is_zero() || c.is_full()) continue;
      if (!res.found || subspace_less(c, *res.witness)) {
        res.found = true;
        res.witness = c;
        res.seed = s;
      }
    }
  }
  return res;
}

}  // namespace homsuper
