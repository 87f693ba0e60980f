#include "homsuper/cli_reports.hpp"

#include <ostream>

#include "homsuper/decomposition.hpp"
#include "homsuper/derivations.hpp"
#include "homsuper/forms.hpp"
#include "homsuper/module_theory.hpp"

namespace homsuper {

namespace {

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& x : v) out.push_back(scalar_to_string(x));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

Json subspace_json(const Subspace& s) { return matrix_json(s.basis()); }

Json names_json(const HomLieSuperAlgebra& a, std::size_t from, std::size_t to) {
  Json out = Json::array();
  for (std::size_t i = from; i < to; ++i) out.push_back(a.basis_name(i));
  return out;
}

const char* side_name(IdealSide s) {
  switch (s) {
    case IdealSide::Left: return "left";
    case IdealSide::Right: return "right";
    case IdealSide::TwoSided: return "two";
  }
  return "two";
}

Json form_json(const HomLieSuperAlgebra& a, const BilinearForm& phi) {
  Json out;
  out["parity"] = form_parity_name(phi.parity);
  out["gram"] = matrix_json(phi.gram);
  out["supersymmetric"] = is_supersymmetric(a, phi);
  out["invariant"] = is_invariant(a, phi);
  out["nondegenerate"] = is_nondegenerate(a, phi);
  out["radical_dim"] = radical(a, phi).dim();
  return out;
}

}  // namespace

Json verify_report(const HomLieSuperAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["even_dim"] = a.even_dim();
  j["odd_dim"] = a.odd_dim();
  j["even"] = names_json(a, 0, a.even_dim());
  j["odd"] = names_json(a, a.even_dim(), a.dim());
  VerificationReport rep = verify(a);
  j["skew_ok"] = rep.skew_ok;
  j["hom_jacobi_ok"] = rep.hom_jacobi_ok;
  if (rep.hom_jacobi_witness) {
    const JacobiWitness& w = *rep.hom_jacobi_witness;
    Json wj;
    wj["triple"] = Json::array({a.basis_name(w.i), a.basis_name(w.j), a.basis_name(w.k)});
    wj["defect"] = vec_json(w.defect);
    j["hom_jacobi_witness"] = wj;
  } else {
    j["hom_jacobi_witness"] = nullptr;
  }
  j["multiplicative"] = rep.multiplicative;
  j["regular"] = rep.regular;
  j["is_hom_lie_superalgebra"] = rep.is_hom_lie_superalgebra;
  j["is_lie_superalgebra"] = rep.is_lie_superalgebra;
  return j;
}

Json analyze_report(const HomLieSuperAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["even_dim"] = a.even_dim();
  j["odd_dim"] = a.odd_dim();
  VerificationReport rep = verify(a);
  Json axioms;
  axioms["skew_ok"] = rep.skew_ok;
  axioms["hom_jacobi_ok"] = rep.hom_jacobi_ok;
  axioms["multiplicative"] = rep.multiplicative;
  axioms["regular"] = rep.regular;
  axioms["is_hom_lie_superalgebra"] = rep.is_hom_lie_superalgebra;
  axioms["is_lie_superalgebra"] = rep.is_lie_superalgebra;
  j["axioms"] = axioms;

  Subspace derived = a.derived_subalgebra();
  j["derived_dim"] = derived.dim();
  j["derived_is_full"] = derived.is_full();
  Subspace z = center(a);
  j["center_dim"] = z.dim();
  j["center_basis"] = subspace_json(z);

  SimplicityCertificate cert = is_simple(a);
  j["simple"] = cert.simple;
  j["simple_exhaustive"] = cert.exhaustive;
  j["simple_witness"] = cert.witness ? subspace_json(*cert.witness) : Json(nullptr);
  j["classical"] = is_classical(a);
  j["reductive_even_part"] = is_reductive_even_part(a);

  ReducibilityReport odd = complete_reducibility(odd_module(a));
  Json oj;
  oj["completely_reducible"] = odd.completely_reducible;
  oj["component_count"] = odd.components.size();
  Json dims = Json::array();
  for (const Subspace& c : odd.components) dims.push_back(c.dim());
  oj["component_dims"] = dims;
  j["odd_module"] = oj;

  ComponentCountReport icc = irreducible_component_count_check(a);
  Json cj;
  cj["applicable"] = icc.applicable;
  cj["count"] = icc.count;
  cj["count_in_dichotomy"] = icc.count_in_dichotomy;
  cj["two_component_identities_hold"] = icc.two_component_identities_hold;
  j["component_count_check"] = cj;

  Json ej;
  try {
    CenterEigenReport ce = center_eigen_element(a);
    ej["applicable"] = true;
    ej["element"] = vec_json(ce.element);
    Json evs = Json::array();
    for (const Scalar& v : ce.eigenvalues) evs.push_back(scalar_to_string(v));
    ej["eigenvalues"] = evs;
    Json comps = Json::array();
    for (const Subspace& c : ce.components) comps.push_back(subspace_json(c));
    ej["components"] = comps;
  } catch (const Error&) {
    ej["applicable"] = false;
  }
  j["center_eigen"] = ej;

  StructuralIdentities si = check_structural_identities(a);
  Json sj;
  sj["applicable"] = si.applicable;
  sj["even_odd_spans_odd"] = si.even_odd_spans_odd;
  sj["odd_odd_spans_even"] = si.odd_odd_spans_even;
  sj["odd_annihilator_zero"] = si.odd_annihilator_zero;
  j["structural_identities"] = sj;
  j["supertrace_zero"] = supertrace_zero_check(a);

  IdealSearchResult search = one_sided_ideal_search(a);
  Json qj;
  qj["found"] = search.found;
  qj["witness_dim"] = search.witness ? Json(search.witness->dim()) : Json(nullptr);
  j["one_sided_ideal_search"] = qj;
  return j;
}

Json killing_report(const HomLieSuperAlgebra& a) {
  Json j;
  j["name"] = a.name();
  BilinearForm k = killing_form(a);
  Json kj = form_json(a, k);
  for (auto it = kj.begin(); it != kj.end(); ++it) j[it.key()] = it.value();
  j["radical_basis"] = subspace_json(radical(a, k));
  BilinearForm tw = alpha_twisted_killing_form(a);
  Json tj;
  tj["gram"] = matrix_json(tw.gram);
  tj["nondegenerate"] = is_nondegenerate(a, tw);
  j["alpha_twisted"] = tj;
  return j;
}

Json forms_report(const HomLieSuperAlgebra& a) {
  Json j;
  j["name"] = a.name();
  FormSpace fs = invariant_form_space(a);
  j["dimension"] = fs.dimension;
  BilinearForm k = killing_form(a);
  j["killing_in_space"] = form_space_as_subspace(fs).contains(k.gram.vec_rm());
  Json basis = Json::array();
  for (const BilinearForm& phi : fs.basis) basis.push_back(form_json(a, phi));
  j["basis"] = basis;
  return j;
}

Json ideals_report(const HomLieSuperAlgebra& a,
                   const std::vector<std::pair<std::string, Vec>>& seeds,
                   const IdealSpec& spec) {
  Json j;
  j["name"] = a.name();
  j["side"] = side_name(spec.side);
  j["graded"] = spec.graded;
  j["alpha_invariant"] = spec.alpha_invariant;
  std::vector<std::pair<std::string, Vec>> work = seeds;
  if (work.empty())
    for (std::size_t i = 0; i < a.dim(); ++i)
      work.emplace_back(a.basis_name(i), unit_vec(a.dim(), i));
  Json closures = Json::array();
  for (const auto& [label, v] : work) {
    IdealReport rep = ideal_closure(a, {v}, spec);
    Json cj;
    cj["seed"] = label;
    cj["seed_vector"] = vec_json(v);
    cj["closure_dim"] = rep.closure.dim();
    cj["chain_length"] = rep.closure_chain_length;
    cj["proper"] = !rep.closure.is_full();
    cj["nonzero"] = !rep.closure.is_zero();
    cj["closure_basis"] = subspace_json(rep.closure);
    closures.push_back(cj);
  }
  j["closures"] = closures;
  IdealSearchResult search = one_sided_ideal_search(a);
  Json qj;
  qj["found"] = search.found;
  qj["witness_basis"] = search.witness ? subspace_json(*search.witness) : Json(nullptr);
  j["one_sided_ideal_search"] = qj;
  return j;
}

Json decompose_report(const HomLieSuperAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["form"] = "killing";
  BilinearForm k = killing_form(a);
  Decomposition dec = decompose(a, k);
  j["form_parity"] = form_parity_name(dec.form_used.parity);
  j["form_invariant"] = dec.form_invariant;
  j["summand_count"] = dec.summands.size();
  Json summands = Json::array();
  std::vector<Subspace> spaces;
  for (const Summand& s : dec.summands) {
    Json sj;
    sj["name"] = s.algebra.name();
    sj["dimension"] = s.space.dim();
    sj["even_dim"] = s.algebra.even_dim();
    sj["odd_dim"] = s.algebra.odd_dim();
    sj["basis_names"] = [&] {
      Json names = Json::array();
      for (const std::string& n : s.algebra.basis_names()) names.push_back(n);
      return names;
    }();
    sj["basis"] = subspace_json(s.space);
    sj["simple"] = is_simple(s.algebra).simple;
    summands.push_back(sj);
    spaces.push_back(s.space);
  }
  j["summands"] = summands;
  j["pairwise_orthogonal"] = dec.pairwise_orthogonal;
  j["pairwise_bracket_zero"] = dec.pairwise_bracket_zero;
  j["is_direct_sum"] = is_direct_sum(spaces);
  return j;
}

Json derivations_report(const HomLieSuperAlgebra& a, long k, std::optional<Parity> parity) {
  Json j;
  j["name"] = a.name();
  j["k"] = k;
  j["multiplicative"] = a.check_multiplicative();
  std::vector<Parity> parities;
  if (parity) parities.push_back(*parity);
  else parities = {Parity::Even, Parity::Odd};
  Json spaces = Json::array();
  for (Parity d : parities) {
    DerivationSpace ds = derivation_space(a, k, d);
    Json sj;
    sj["parity"] = parity_name(d);
    sj["dimension"] = ds.dimension;
    sj["inner_dimension"] = ds.inner_space.dim();
    sj["inner_contained"] = ds.inner_contained;
    Json basis = Json::array();
    for (const Matrix& m : ds.basis) basis.push_back(matrix_json(m));
    sj["basis"] = basis;
    spaces.push_back(sj);
  }
  j["spaces"] = spaces;
  return j;
}

Json criterion_report(const HomLieSuperAlgebra& a) {
  Json j;
  j["name"] = a.name();
  KillingCriterionReport rep = killing_nondegenerate_criterion(a);
  j["killing_nondegenerate"] = rep.killing_nondegenerate;
  j["commutative_ideal_found"] = rep.commutative_ideal.found;
  j["commutative_ideal_dim"] =
      rep.commutative_ideal.witness ? Json(rep.commutative_ideal.witness->dim()) : Json(nullptr);
  j["applicable"] = rep.applicable;
  j["summand_count"] = rep.summands.size();
  Json summands = Json::array();
  for (const SummandVerdict& v : rep.summands) {
    Json sj;
    sj["dimension"] = v.dimension;
    sj["simple"] = v.simple;
    sj["classical"] = v.classical;
    sj["restricted_killing_nondegenerate"] = v.restricted_killing_nondegenerate;
    summands.push_back(sj);
  }
  j["summands"] = summands;
  j["all_simple"] = rep.all_simple;
  j["all_classical"] = rep.all_classical;
  j["all_restrictions_nondegenerate"] = rep.all_restrictions_nondegenerate;
  j["consistent"] = rep.consistent;
  j["note"] = rep.note;
  return j;
}

namespace {

bool json_is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const Json& e : v)
    if (!json_is_scalar(e)) return false;
  return true;
}

std::string flat_text(const Json& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += scalar_text(v[i]);
  }
  return out + "]";
}

void render_object(std::ostream& out, const Json& obj, const std::string& indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const Json& v = it.value();
    if (json_is_scalar(v)) {
      out << indent << it.key() << ": " << scalar_text(v) << "\n";
    } else if (is_flat_array(v)) {
      out << indent << it.key() << ": " << flat_text(v) << "\n";
    } else if (v.is_array()) {
      out << indent << it.key() << ":\n";
      for (const Json& e : v) {
        if (is_flat_array(e)) {
          out << indent << "  " << flat_text(e) << "\n";
        } else if (e.is_array()) {
          out << indent << "  -\n";
          for (const Json& row : e) out << indent << "    " << flat_text(row) << "\n";
        } else {
          out << indent << "  -\n";
          render_object(out, e, indent + "    ");
        }
      }
    } else {
      out << indent << it.key() << ":\n";
      render_object(out, v, indent + "  ");
    }
  }
}

}  // namespace

void render_text(std::ostream& out, const Json& doc) { render_object(out, doc, ""); }

}  // namespace homsuper
