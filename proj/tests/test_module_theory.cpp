#include "doctest.h"
#include "fixtures.hpp"
#include "homsuper/cli_format.hpp"
#include "homsuper/decomposition.hpp"
#include "homsuper/module_theory.hpp"

#include <algorithm>

using namespace homsuper;

TEST_CASE("odd module of osp12 is irreducible") {
  auto a = fx("osp12");
  auto m = odd_module(a);
  CHECK(m.space == a.odd_part());
  for (const auto& op : m.operators)
    for (std::size_t r = 0; r < m.space.dim(); ++r)
      CHECK(m.space.contains(op.apply(m.space.basis_vector(r))));

  auto cr = complete_reducibility(m);
  CHECK(cr.completely_reducible);
  REQUIRE(cr.components.size() == 1);
  CHECK(cr.components[0] == a.odd_part());
  CHECK(minimal_submodules(m) == cr.components);
}

TEST_CASE("odd module of c11 splits into two lines") {
  auto a = fx("c11");
  auto cr = complete_reducibility(odd_module(a));
  CHECK(cr.completely_reducible);
  REQUIRE(cr.components.size() == 2);
  CHECK(cr.components[0].dim() == 1);
  CHECK(cr.components[1].dim() == 1);
  CHECK(is_direct_sum(cr.components));
  CHECK(cr.components[0].sum(cr.components[1]) == a.odd_part());
}

TEST_CASE("a nilpotent action is not completely reducible") {
  Matrix n = Matrix::zero(2, 2);
  n.at(0, 1) = 1;
  ActionModule m{Subspace::full(2), {n}};

  CHECK(spin_submodule(m, unit_vec(2, 0)) == Subspace::span(2, {unit_vec(2, 0)}));
  CHECK(spin_submodule(m, unit_vec(2, 1)).is_full());
  CHECK_FALSE(invariant_complement(m, Subspace::span(2, {unit_vec(2, 0)})).has_value());

  auto cr = complete_reducibility(m);
  CHECK_FALSE(cr.completely_reducible);
}

TEST_CASE("invariant complements exist in split situations") {
  auto ds = direct_sum({fx("sl2"), fx("sl2")});
  auto m = graded_adjoint_module(ds.algebra);
  auto comp = invariant_complement(m, ds.blocks[0]);
  REQUIRE(comp.has_value());
  CHECK(*comp == ds.blocks[1]);

  auto minimal = minimal_submodules(m);
  REQUIRE(minimal.size() == 2);
  CHECK(std::is_sorted(minimal.begin(), minimal.end(), subspace_less));
  CHECK((minimal[0] == ds.blocks[0] || minimal[0] == ds.blocks[1]));
  CHECK(minimal[0].sum(minimal[1]).is_full());
}

TEST_CASE("restricted modules keep the operators") {
  auto ds = direct_sum({fx("sl2"), fx("heis3")});
  auto m = graded_adjoint_module(ds.algebra);
  auto r = restricted_module(m, ds.blocks[0]);
  CHECK(r.space == ds.blocks[0]);
  CHECK(r.operators.size() == m.operators.size());
  for (const auto& op : r.operators)
    for (std::size_t i = 0; i < r.space.dim(); ++i)
      CHECK(r.space.contains(op.apply(r.space.basis_vector(i))));
}

TEST_CASE("graded adjoint submodules are exactly the graded ideals") {
  auto h = fx("heis3");
  auto m = graded_adjoint_module(h);
  for (const auto& sub : minimal_submodules(m))
    CHECK(is_ideal(h, sub, IdealSpec{IdealSide::TwoSided, true, false}));
}

TEST_CASE("classicality verdicts") {
  for (const char* name : {"sl2", "hsl2", "osp12", "hosp12", "c11"}) {
    CAPTURE(name);
    CHECK(is_classical(fx(name)));
  }
  for (const char* name : {"heis3", "abelian_1", "abelian_3"}) {
    CAPTURE(name);
    CHECK_FALSE(is_classical(fx(name)));
  }
}

TEST_CASE("reductive even parts") {
  for (const char* name : {"sl2", "osp12", "c11", "abelian_2"}) {
    CAPTURE(name);
    CHECK(is_reductive_even_part(fx(name)));
  }
  CHECK_FALSE(is_reductive_even_part(fx("heis3")));
}

TEST_CASE("irreducible component count dichotomy") {
  auto one = irreducible_component_count_check(fx("osp12"));
  CHECK(one.applicable);
  CHECK(one.count == 1);
  CHECK(one.count_in_dichotomy);
  CHECK_FALSE(one.two_component_identities_hold);

  auto two = irreducible_component_count_check(fx("c11"));
  CHECK(two.applicable);
  CHECK(two.count == 2);
  CHECK(two.count_in_dichotomy);
  CHECK(two.two_component_identities_hold);

  CHECK_FALSE(irreducible_component_count_check(fx("sl2")).applicable);   // no odd part
  CHECK_FALSE(irreducible_component_count_check(fx("heis3")).applicable);  // not classical
}

TEST_CASE("center eigen element of c11") {
  auto a = fx("c11");
  auto r = center_eigen_element(a);
  CHECK(r.center_space == Subspace::span(3, {unit_vec(3, 0)}));
  CHECK(r.element == unit_vec(3, 0));
  REQUIRE(r.components.size() == 2);
  REQUIRE(r.eigenvalues.size() == 2);
  CHECK(r.eigenvalues == std::vector<Scalar>{Scalar(-1), Scalar(1)});
  // The defining property: the element scales each component by its eigenvalue.
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(r.components[c].dim() == 1);
    Vec v = r.components[c].basis_vector(0);
    CHECK(a.bracket(r.element, v) == vec_scaled(v, r.eigenvalues[c]));
  }
  CHECK(r.components[0].sum(r.components[1]) == a.odd_part());
}

TEST_CASE("center eigen element needs a classical algebra with center") {
  CHECK_THROWS_WITH_AS(center_eigen_element(fx("osp12")), doctest::Contains("HypothesisNotMet"),
                       Error);
  CHECK_THROWS_AS(center_eigen_element(fx("heis3")), Error);
  CHECK_THROWS_AS(center_eigen_element(fx("sl2")), Error);
}

TEST_CASE("supertrace of every adjoint vanishes on the fixtures") {
  for (const char* name : {"sl2", "hsl2", "osp12", "hosp12", "heis3", "c11", "abelian_1",
                           "abelian_2", "abelian_3"}) {
    CAPTURE(name);
    CHECK(supertrace_zero_check(fx(name)));
  }
  // Counterexample: the affine line, where ad(h) has trace 1.
  auto t = parse_algebra_string("name affine\neven h x\nalpha identity\nbracket h x = 1 x\n");
  CHECK_FALSE(supertrace_zero_check(t));
}
