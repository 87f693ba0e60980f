#include "doctest.h"
#include "fixtures.hpp"
#include "homsuper/decomposition.hpp"
#include "homsuper/ideals.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace homsuper;

TEST_CASE("closures on the heisenberg algebra") {
  auto h = fx("heis3");
  Vec x = unit_vec(3, 0), z = unit_vec(3, 2);

  IdealSpec left{IdealSide::Left, false, false};
  auto r = ideal_closure(h, {x}, left);
  CHECK(r.closure == Subspace::span(3, {x, z}));
  CHECK(r.closure_chain_length == 1);

  IdealSpec two{IdealSide::TwoSided, false, false};
  CHECK(ideal_closure(h, {z}, two).closure == Subspace::span(3, {z}));  // central line
  CHECK(ideal_closure(h, {x, unit_vec(3, 1)}, two).closure.is_full());
}

TEST_CASE("closures match the brute-force spin on every fixture") {
  for (const char* name : {"sl2", "hsl2", "osp12", "heis3", "c11"}) {
    CAPTURE(name);
    auto a = fx(name);
    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < a.dim(); ++i) seeds.push_back(unit_vec(a.dim(), i));
    Vec mixed = zero_vec(a.dim());
    mixed[0] = 1;
    mixed[a.dim() - 1] = scalar_from_string("2/3");
    seeds.push_back(mixed);

    for (IdealSide side : {IdealSide::Left, IdealSide::Right, IdealSide::TwoSided})
      for (bool graded : {false, true})
        for (bool alpha : {false, true}) {
          IdealSpec spec{side, graded, alpha};
          for (const Vec& seed : seeds) {
            CAPTURE(vec_to_string(seed));
            CHECK(ideal_closure(a, {seed}, spec).closure == oracles::naive_closure(a, seed, spec));
          }
        }
  }
}

TEST_CASE("the alpha flag closes under the twist") {
  Matrix swap = Matrix::zero(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  auto a = fx("abelian_2").with_alpha(swap, "swapped");
  Vec a1 = unit_vec(2, 0);

  IdealSpec plain{IdealSide::TwoSided, false, false};
  CHECK(ideal_closure(a, {a1}, plain).closure == Subspace::span(2, {a1}));

  IdealSpec closed{IdealSide::TwoSided, false, true};
  CHECK(ideal_closure(a, {a1}, closed).closure.is_full());
  CHECK(ideal_closure(a, {a1}, closed).closure == oracles::naive_closure(a, a1, closed));
}

TEST_CASE("ideal membership test") {
  auto h = fx("heis3");
  IdealSpec two{IdealSide::TwoSided, true, true};
  CHECK(is_ideal(h, Subspace::span(3, {unit_vec(3, 2)}), two));
  CHECK(is_ideal(h, Subspace::full(3), two));
  CHECK(is_ideal(h, Subspace::zero(3), two));
  CHECK_FALSE(is_ideal(h, Subspace::span(3, {unit_vec(3, 0)}), two));

  auto s = fx("sl2");
  CHECK_FALSE(is_ideal(s, Subspace::span(3, {unit_vec(3, 0)}), two));
  CHECK_FALSE(is_ideal(s, s.even_part().intersect(Subspace::span(3, {unit_vec(3, 2)})), two));
}

TEST_CASE("bracket span") {
  auto s = fx("sl2");
  CHECK(bracket_span(s, Subspace::full(3), Subspace::full(3)).is_full());
  Subspace e = Subspace::span(3, {unit_vec(3, 0)});
  CHECK(bracket_span(s, e, e).is_zero());  // [e,e] = 0

  auto h = fx("heis3");
  CHECK(bracket_span(h, Subspace::full(3), Subspace::full(3)) ==
        Subspace::span(3, {unit_vec(3, 2)}));
}

TEST_CASE("even centers") {
  CHECK(center(fx("sl2")).is_zero());
  CHECK(center(fx("heis3")) == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(center(fx("c11")) == Subspace::span(3, {unit_vec(3, 0)}));
  CHECK(center(fx("abelian_3")).is_full());
  CHECK(center(fx("osp12")).is_zero());
}

TEST_CASE("subspace order is total and sorts by dimension first") {
  Subspace z = Subspace::zero(3);
  Subspace e0 = Subspace::span(3, {unit_vec(3, 0)});
  Subspace e1 = Subspace::span(3, {unit_vec(3, 1)});
  Subspace plane = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)});

  CHECK(subspace_less(z, e0));
  CHECK(subspace_less(e0, plane));
  CHECK(subspace_less(e0, e1));  // pivot 0 before pivot 1
  CHECK_FALSE(subspace_less(e0, e0));
  CHECK((subspace_less(e0, e1) != subspace_less(e1, e0)));

  std::vector<Subspace> all = {plane, e1, z, e0};
  std::sort(all.begin(), all.end(), subspace_less);
  CHECK(all == std::vector<Subspace>{z, e0, e1, plane});
}

TEST_CASE("simplicity verdicts") {
  for (const char* name : {"sl2", "hsl2", "osp12", "hosp12", "c11"}) {
    CAPTURE(name);
    auto cert = is_simple(fx(name));
    CHECK(cert.simple);
    CHECK(cert.derived_nonzero);
    CHECK(cert.exhaustive);
    CHECK_FALSE(cert.witness.has_value());
  }
  for (const char* name : {"heis3", "abelian_1", "abelian_2"}) {
    CAPTURE(name);
    auto cert = is_simple(fx(name));
    CHECK_FALSE(cert.simple);
  }
  // Abelian: the bracket vanishes, so the derived condition already fails.
  CHECK_FALSE(is_simple(fx("abelian_2")).derived_nonzero);
}

TEST_CASE("a direct sum is never simple and the witness is a block") {
  auto ds = direct_sum({fx("sl2"), fx("sl2")});
  auto cert = is_simple(ds.algebra);
  CHECK_FALSE(cert.simple);
  REQUIRE(cert.witness.has_value());
  CHECK(is_ideal(ds.algebra, *cert.witness, IdealSpec{IdealSide::TwoSided, true, false}));
  bool is_block = std::any_of(ds.blocks.begin(), ds.blocks.end(),
                              [&](const Subspace& b) { return b == *cert.witness; });
  CHECK(is_block);
}

TEST_CASE("structural identities of the odd part") {
  for (const char* name : {"osp12", "hosp12", "c11"}) {
    CAPTURE(name);
    auto si = check_structural_identities(fx(name));
    CHECK(si.applicable);
    CHECK(si.even_odd_spans_odd);
    CHECK(si.odd_odd_spans_even);
    CHECK(si.odd_annihilator_zero);
    CHECK(si.odd_annihilator.is_zero());
  }
  CHECK_FALSE(check_structural_identities(fx("sl2")).applicable);
  CHECK_FALSE(check_structural_identities(fx("heis3")).applicable);
}

TEST_CASE("one-sided ideal search") {
  for (const char* name : {"sl2", "hsl2", "osp12", "hosp12", "c11"}) {
    CAPTURE(name);
    CHECK_FALSE(one_sided_ideal_search(fx(name)).found);
  }
  auto r = one_sided_ideal_search(fx("heis3"));
  REQUIRE(r.found);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->dim() == 1);
  CHECK(is_ideal(fx("heis3"), *r.witness, IdealSpec{IdealSide::Left, false, false}));
  CHECK(one_sided_ideal_search(fx("abelian_2")).found);
}

TEST_CASE("proper graded closures enumerate candidate ideals") {
  for (const char* name : {"sl2", "hsl2", "osp12", "hosp12", "c11", "abelian_1"}) {
    CAPTURE(name);
    CHECK(proper_graded_closures(fx(name)).empty());
  }

  auto h = fx("heis3");
  auto closures = proper_graded_closures(h);
  CHECK(closures.size() == 4);
  for (const auto& c : closures) {
    CHECK(c.dim() > 0);
    CHECK(c.dim() < 3);
    CHECK(is_ideal(h, c, IdealSpec{IdealSide::TwoSided, true, false}));
  }
  // Deduplicated: the center appears once.
  Subspace z = Subspace::span(3, {unit_vec(3, 2)});
  CHECK(std::count(closures.begin(), closures.end(), z) == 1);

  CHECK(proper_graded_closures(fx("abelian_2")).size() == 3);
}
