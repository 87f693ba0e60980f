#include "doctest.h"
#include "homsuper/exact_linalg.hpp"
#include "oracles.hpp"

using namespace homsuper;

namespace {
Scalar Q(const std::string& s) { return scalar_from_string(s); }

Matrix mat(std::size_t rows, std::size_t cols, const std::vector<std::string>& entries) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Q(entries[r * cols + c]);
  return m;
}

// Deterministic small-integer fill, enough to exercise pivoting and fractions.
Matrix pseudo(std::size_t rows, std::size_t cols, long seed) {
  Matrix m(rows, cols);
  long state = seed;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      state = (state * 1103515245 + 12345) % 2147483648;
      m.at(r, c) = Scalar((state >> 16) % 7 - 3);
    }
  return m;
}
}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(Q("3/6") == Q("1/2"));
  CHECK(Q("-4/6") == Q("-2/3"));
  CHECK(Q("+7") == Scalar(7));
  CHECK(scalar_to_string(Q("10/4")) == "5/2");
  CHECK(scalar_to_string(Scalar(-3)) == "-3");
  CHECK(scalar_to_string(Q("0/5")) == "0");
  CHECK_THROWS_AS(Q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Q(""), std::invalid_argument);
  CHECK_THROWS_AS(Q("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Q("two"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Q("1 2"), std::invalid_argument);
}

TEST_CASE("vector helpers") {
  Vec v = unit_vec(3, 1);
  CHECK(v == Vec{0, 1, 0});
  CHECK(vec_is_zero(zero_vec(4)));
  CHECK_FALSE(vec_is_zero(v));
  CHECK(vec_add(v, v) == Vec{0, 2, 0});
  CHECK(vec_sub(v, v) == zero_vec(3));
  CHECK(vec_scaled(v, Q("1/2")) == Vec{0, Q("1/2"), 0});
  CHECK(vec_to_string(Vec{Q("1/2"), Scalar(-3)}) == "(1/2, -3)");
}

TEST_CASE("rref is idempotent and reports pivots") {
  Matrix m = mat(3, 4, {"1", "2", "0", "3", "2", "4", "1", "1", "0", "0", "1", "-5"});
  Matrix r = rref(m);
  CHECK(rref(r) == r);
  Matrix copy = m;
  auto pivots = rref_in_place(copy);
  CHECK(copy == r);
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  CHECK(rank(m) == 2);
}

TEST_CASE("determinant matches cofactor expansion") {
  for (long seed : {1L, 2L, 3L, 4L, 5L}) {
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
      Matrix m = pseudo(n, n, seed * 10 + n);
      CHECK(determinant(m) == oracles::det_cofactor(m));
    }
  }
  CHECK(determinant(Matrix::identity(5)) == 1);
  CHECK(determinant(Matrix::zero(3, 3)) == 0);
}

TEST_CASE("rank matches largest nonzero minor") {
  for (long seed : {7L, 8L, 9L}) {
    Matrix m = pseudo(4, 5, seed);
    CHECK(rank(m) == oracles::rank_minors(m));
    CHECK(rank(m.transposed()) == rank(m));
  }
  Matrix outer = pseudo(3, 1, 11) * pseudo(1, 4, 13);
  CHECK(rank(outer) == oracles::rank_minors(outer));
  CHECK(rank(outer) <= 1);
}

TEST_CASE("inverse and powers") {
  Matrix m = mat(2, 2, {"2", "1", "1", "1"});
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());
  CHECK(m.pow(0).is_identity());
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.pow(-2) == *inv * *inv);

  Matrix singular = mat(2, 2, {"1", "2", "2", "4"});
  CHECK_FALSE(singular.inverse().has_value());
  CHECK_THROWS_AS(singular.pow(-1), Error);
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  Matrix m = mat(3, 2, {"1", "1", "1", "-1", "2", "0"});
  auto x = solve(m, Vec{Scalar(3), Scalar(1), Scalar(4)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == Vec{Scalar(3), Scalar(1), Scalar(4)});
  CHECK_FALSE(solve(m, Vec{Scalar(3), Scalar(1), Scalar(5)}).has_value());
}

TEST_CASE("kernel vectors are annihilated and span the full nullspace") {
  Matrix m = pseudo(3, 5, 21);
  Subspace k = kernel(m);
  CHECK(k.dim() == 5 - rank(m));
  for (std::size_t i = 0; i < k.dim(); ++i) CHECK(vec_is_zero(m.apply(k.basis_vector(i))));
}

TEST_CASE("subspace membership, coordinates, sum, intersection") {
  Subspace u = Subspace::span(4, {Vec{1, 0, 1, 0}, Vec{0, 1, 0, 0}});
  Subspace w = Subspace::span(4, {Vec{1, 1, 1, 0}, Vec{0, 0, 0, 1}});
  CHECK(u.contains(Vec{2, 3, 2, 0}));
  CHECK_FALSE(u.contains(Vec{1, 0, 0, 0}));
  auto coords = u.coordinates_of(Vec{2, 3, 2, 0});
  REQUIRE(coords.has_value());
  CHECK(u.basis().transposed().apply(*coords) == Vec{2, 3, 2, 0});
  CHECK_FALSE(u.coordinates_of(Vec{0, 0, 0, 1}).has_value());

  Subspace s = u.sum(w);
  Subspace i = u.intersect(w);
  CHECK(s.dim() + i.dim() == u.dim() + w.dim());
  CHECK(s.contains(u));
  CHECK(s.contains(w));
  CHECK(u.contains(i));
  CHECK(w.contains(i));
  CHECK(i.contains(Vec{1, 1, 1, 0}));
}

TEST_CASE("subspace canonical bases make equality structural") {
  Subspace a = Subspace::span(3, {Vec{2, 0, 2}, Vec{0, 3, 0}});
  Subspace b = Subspace::span(3, {Vec{1, 1, 1}, Vec{0, 1, 0}});
  CHECK(a == b);
  CHECK(a.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(Subspace::zero(3).dim() == 0);
  CHECK(Subspace::full(3).is_full());
  CHECK(Subspace::row_space(Matrix::identity(3)) == Subspace::full(3));
}

TEST_CASE("direct sum detection") {
  Subspace e1 = Subspace::span(3, {Vec{1, 0, 0}});
  Subspace e2 = Subspace::span(3, {Vec{0, 1, 0}});
  Subspace diag = Subspace::span(3, {Vec{1, 1, 0}});
  CHECK(is_direct_sum({e1, e2}));
  CHECK(is_direct_sum({e1, e2, Subspace::span(3, {Vec{0, 0, 1}})}));
  CHECK_FALSE(is_direct_sum({e1, e2, diag}));
  CHECK(is_direct_sum({}));
}

TEST_CASE("characteristic polynomial") {
  Matrix d = Matrix::diagonal({Scalar(1), Scalar(2), Scalar(3)});
  CHECK(char_poly(d) == std::vector<Scalar>{Scalar(-6), Scalar(11), Scalar(-6), Scalar(1)});
  Matrix m = pseudo(3, 3, 31);
  auto p = char_poly(m);
  // Cayley-Hamilton.
  Matrix acc = Matrix::zero(3, 3);
  for (std::size_t i = 0; i < p.size(); ++i) acc = acc + m.pow(static_cast<long>(i)).scaled(p[i]);
  CHECK(acc.is_zero());
}

TEST_CASE("distinct rational eigenvalues") {
  auto ev = distinct_rational_eigenvalues(Matrix::diagonal({Scalar(3), Scalar(-1), Q("1/2")}));
  REQUIRE(ev.has_value());
  CHECK(*ev == std::vector<Scalar>{Scalar(-1), Q("1/2"), Scalar(3)});

  // Repeated eigenvalue.
  CHECK_FALSE(distinct_rational_eigenvalues(Matrix::identity(2)).has_value());
  // Irrational spectrum: x^2 - 2.
  Matrix root2 = mat(2, 2, {"0", "2", "1", "0"});
  CHECK_FALSE(distinct_rational_eigenvalues(root2).has_value());
  // Complex spectrum: rotation.
  Matrix rot = mat(2, 2, {"0", "-1", "1", "0"});
  CHECK_FALSE(distinct_rational_eigenvalues(rot).has_value());
}

TEST_CASE("incremental rref mirrors batch span") {
  std::vector<Vec> vectors = {Vec{1, 2, 0, 1}, Vec{2, 4, 0, 2}, Vec{0, 0, 1, 1}, Vec{1, 2, 1, 2}};
  IncrementalRref inc(4);
  CHECK(inc.add(vectors[0]));
  CHECK_FALSE(inc.add(vectors[1]));
  CHECK(inc.add(vectors[2]));
  CHECK_FALSE(inc.add(vectors[3]));
  CHECK(inc.dim() == 2);
  CHECK(inc.contains(vectors[3]));
  CHECK_FALSE(inc.contains(Vec{0, 1, 0, 0}));
  CHECK(inc.to_subspace() == Subspace::span(4, vectors));
}

TEST_CASE("kronecker matches the row-major flattening identity") {
  Matrix a = pseudo(2, 2, 41);
  Matrix x = pseudo(2, 3, 43);
  Matrix b = pseudo(3, 3, 47);
  CHECK((a * x * b).vec_rm() == a.kronecker(b.transposed()).apply(x.vec_rm()));
  CHECK(Matrix::from_vec_rm(x.vec_rm(), 2, 3) == x);

  Matrix i2 = Matrix::identity(2);
  CHECK(i2.kronecker(i2) == Matrix::identity(4));
  CHECK(a.kronecker(b).rows() == 6);
  CHECK(a.kronecker(b).cols() == 6);
}

TEST_CASE("stacking and row and column access") {
  Matrix a = pseudo(2, 3, 51);
  Matrix b = pseudo(1, 3, 53);
  Matrix v = Matrix::vstack(a, b);
  CHECK(v.rows() == 3);
  CHECK(v.row(2) == b.row(0));
  Matrix h = Matrix::hstack(a, pseudo(2, 2, 55));
  CHECK(h.cols() == 5);
  CHECK(h.col(1) == a.col(1));

  Matrix c = a;
  c.set_row(0, Vec{9, 9, 9});
  CHECK(c.row(0) == Vec{9, 9, 9});
  c.set_col(2, Vec{7, 7});
  CHECK(c.at(1, 2) == 7);
}
