#include "doctest.h"
#include "support.hpp"

#include "symlie/lie.hpp"
#include "symlie/stabilizer_kernels.hpp"

using namespace symlie;
using namespace symlie::testing;

namespace {

std::vector<Vector> flat(const std::vector<Matrix>& ms) {
  std::vector<Vector> out;
  for (const auto& m : ms) out.push_back(m.flatten());
  return out;
}

// dim(U cap W) = dim U + dim W - dim(U + W).
std::size_t intersection_dim(const std::vector<Matrix>& u, const std::vector<Matrix>& w, std::size_t cols) {
  auto both = flat(u);
  for (const auto& v : flat(w)) both.push_back(v);
  return rank(flat(u), cols) + rank(flat(w), cols) - rank(both, cols);
}

Matrix diag(std::vector<Scalar> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

}  // namespace

TEST_CASE("star action examples") {
  auto r2 = xring(2);
  Rng rng(1);
  Matrix g = rng.int_matrix(2, -5, 5);
  CHECK(star_action(g, P("7", r2)).is_zero());
  CHECK(star_action(Matrix::elementary(2, 0, 1), P("x1", r2)) == P("-x2", r2));
  CHECK(elementary_star(0, 1, P("x1", r2)) == P("-x2", r2));
  for (int t = 0; t < 20; ++t) {
    g = rng.int_matrix(2, -5, 5);
    Scalar g11 = g(0, 0), g12 = g(0, 1), g21 = g(1, 0), g22 = g(1, 1);
    Polynomial expect = P("x1^2", r2) * (-(Scalar(2) * g11 + g21)) +
                        P("x1*x2", r2) * (-(Scalar(2) * g12 + Scalar(2) * g21 + g11 + g22)) +
                        P("x2^2", r2) * (-(Scalar(2) * g22 + g12));
    CHECK(star_action(g, P("x1^2 + x2^2 + x1*x2", r2)) == expect);
  }
  CHECK_THROWS_AS(star_action(Matrix::identity(3), P("x1", r2)), std::invalid_argument);
}

TEST_CASE("star action agrees with the rule-based derivation") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    auto ring = xring(n);
    Matrix g = rng.int_matrix(n, -3, 3);
    Polynomial p = rng.any(ring, 4, 5);
    CHECK(star_action(g, p) == star_by_rules(g, p));
  }
}

TEST_CASE("star action is a derivation that preserves degree") {
  Rng rng(7);
  auto r3 = xring(3);
  for (int t = 0; t < 50; ++t) {
    Matrix g = rng.int_matrix(3, -3, 3);
    Polynomial p = rng.any(r3, 3, 4), q = rng.any(r3, 3, 4);
    CHECK(star_action(g, p * q) == star_action(g, p) * q + p * star_action(g, q));
    Polynomial h = rng.homogeneous(r3, 3, 5);
    Polynomial gh = star_action(g, h);
    CHECK((gh.is_zero() || gh.homogeneous_degree() == 3));
    CHECK(star_action(Matrix::identity(3), h) == h * Scalar(-3));
  }
}

TEST_CASE("serial and parallel residual tables agree") {
  for (const char* name : {"staged_tree_8.ideal", "colored_path.ideal", "gaussian_4cycle.ideal"}) {
    IdealSpec ideal = read_ideal_file(data_path(name));
    GradedBasis gb = graded_basis(ideal, ideal.max_degree());
    CHECK(residual_table_serial(gb, ideal.ring) == residual_table_parallel(gb, ideal.ring));
    StabilizerOptions serial{false, KernelMode::kSerial};
    CHECK(symmetry_lie_algebra(ideal, serial).basis == symmetry_lie_algebra(ideal).basis);
  }
}

TEST_CASE("stabilizer system of a single quadric in two variables") {
  IdealSpec ideal = ideal_of(xring(2), {"x1^2 + x2^2 + x1*x2"});
  StabilizerSystem sys = stabilizer_system(ideal, 2);
  // unknowns g11, g12, g21, g22
  Vector first = {1, -2, -1, -1};   // (2g11 + g21) - (2g12 + 2g21 + g11 + g22)
  Vector second = {2, -1, 1, -2};   // (2g11 + g21) - (2g22 + g12)
  CHECK(sys.constraints.in_span(first));
  CHECK(sys.constraints.in_span(second));
  CHECK(sys.constraints.rank() == 2);
  LieAlgebraBasis algebra = lie_algebra_from_system(sys);
  CHECK(algebra.dimension() == 2);
  CHECK(bracket_closure_check(algebra));
}

TEST_CASE("maximal ideal gives all matrices") {
  IdealSpec ideal = ideal_of(xring(3), {"x1", "x2", "x3"});
  StabilizerSystem sys = stabilizer_system(ideal, 1);
  CHECK(sys.raw_rows == 0);
  LieAlgebraBasis algebra = lie_algebra_from_system(sys);
  CHECK(algebra.dimension() == 9);
  CHECK(diagonal_subalgebra_dim(algebra.basis) == 3);
}

TEST_CASE("staged tree ideal system") {
  IdealSpec ideal = read_ideal_file(data_path("staged_tree_8.ideal"));
  StabilizerSystem sys = stabilizer_system(ideal, 2);
  CHECK(sys.constraints.cols() == 64);
  LieAlgebraBasis algebra = lie_algebra_from_system(sys);
  CHECK(algebra.dimension() == 4);
  CHECK(bracket_closure_check(algebra));
  for (const Matrix& m : read_matrix_list_file(data_path("bases/staged_tree_8.basis"))) {
    CHECK(membership(algebra, m));
    CHECK(satisfies(sys, m));
  }
}

TEST_CASE("algebra dimensions") {
  CHECK(symmetry_lie_algebra(ideal_of(xring(2), {"x1^2 + x2^2 + x1*x2"})).dimension() == 2);
  LieAlgebraBasis squares = symmetry_lie_algebra(read_ideal_file(data_path("sum_of_squares.ideal")));
  CHECK(squares.dimension() == 4);
  CHECK(bracket_closure_check(squares));
  LieAlgebraBasis cycle = symmetry_lie_algebra(read_ideal_file(data_path("gaussian_4cycle.ideal")));
  CHECK(cycle.dimension() == 4);
  CHECK(bracket_closure_check(cycle));
}

TEST_CASE("canonical basis form") {
  LieAlgebraBasis algebra = symmetry_lie_algebra(read_ideal_file(data_path("colored_path.ideal")));
  // Each basis vector has a free coordinate equal to 1 where every other
  // basis vector is 0.
  auto vs = flat(algebra.basis);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    bool found = false;
    for (std::size_t c = 0; c < vs[k].size() && !found; ++c) {
      if (!vs[k][c].is_one()) continue;
      bool alone = true;
      for (std::size_t o = 0; o < vs.size(); ++o)
        if (o != k && !vs[o][c].is_zero()) alone = false;
      found = alone;
    }
    CHECK(found);
  }
}

TEST_CASE("multidegree stabilizers") {
  IdealSpec quad = ideal_of(xring(2), {"x1^2 + x2^2 + x1*x2"});
  std::vector<int> top = {2};
  CHECK(symmetry_lie_algebra_multidegree(quad, top).basis == symmetry_lie_algebra(quad).basis);
  std::vector<int> two = {2, 3};
  CHECK(symmetry_lie_algebra_multidegree(quad, two).dimension() == 2);

  IdealSpec mixed = ideal_of(xring(2), {"x1^2", "x2^3"}, false);
  LieAlgebraBasis d2 = symmetry_lie_algebra_at_degree(mixed, 2, {true, KernelMode::kParallel});
  LieAlgebraBasis d3 = symmetry_lie_algebra_at_degree(mixed, 3);
  LieAlgebraBasis both = symmetry_lie_algebra_multidegree(mixed, two);
  CHECK(both.dimension() == intersection_dim(d2.basis, d3.basis, 4));
  CHECK(both.dimension() == 2);
  for (const Matrix& m : both.basis) {
    CHECK(membership(d2, m));
    CHECK(membership(d3, m));
    CHECK(m.is_diagonal());
  }
}

TEST_CASE("degree handling") {
  IdealSpec mixed = ideal_of(xring(2), {"x1^2", "x2^3"});
  CHECK_THROWS_AS(stabilizer_system(mixed, 2), PreconditionError);
  LieAlgebraBasis low = symmetry_lie_algebra_at_degree(mixed, 1, {true, KernelMode::kParallel});
  CHECK(low.empty_component);
  CHECK(low.graded_only);
  CHECK(low.dimension() == 4);
}

TEST_CASE("degree stability and monotonicity") {
  for (const char* name : {"staged_tree_8.ideal", "sum_of_squares.ideal"}) {
    IdealSpec ideal = read_ideal_file(data_path(name));
    int d = ideal.max_degree();
    CHECK(symmetry_lie_algebra_at_degree(ideal, d).dimension() ==
          symmetry_lie_algebra_at_degree(ideal, d + 1).dimension());
  }
  IdealSpec quad = ideal_of(xring(3), {"x1*x2 - x3^2", "x1^3 + x2^3"});
  std::size_t previous = 9;
  for (int d = 2; d <= 5; ++d) {
    std::size_t dim = symmetry_lie_algebra_at_degree(quad, d, {true, KernelMode::kParallel}).dimension();
    CHECK(dim <= previous);
    previous = dim;
  }
}

TEST_CASE("membership examples") {
  IdealSpec squares = read_ideal_file(data_path("sum_of_squares.ideal"));
  LieAlgebraBasis algebra = symmetry_lie_algebra(squares);
  CHECK(membership(algebra, Matrix::identity(3)));
  CHECK_FALSE(membership(algebra, Matrix::elementary(3, 0, 1)));
  CHECK_THROWS_AS(membership(algebra, Matrix::identity(2)), std::invalid_argument);
  for (const Matrix& m : read_matrix_list_file(data_path("bases/sum_of_squares.basis"))) CHECK(membership(algebra, m));
  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    auto ring = xring(3);
    IdealSpec random_ideal = make_ideal(ring, {rng.homogeneous(ring, 2, 4), rng.homogeneous(ring, 3, 4)});
    CHECK(membership(symmetry_lie_algebra(random_ideal), Matrix::identity(3)));
  }
}

TEST_CASE("bracket closure of a singleton identity") {
  LieAlgebraBasis single;
  single.n = 3;
  single.basis = {Matrix::identity(3)};
  CHECK(bracket_closure_check(single));
  single.basis = {Matrix::elementary(3, 0, 1), Matrix::elementary(3, 1, 0)};
  CHECK_FALSE(bracket_closure_check(single));
}

TEST_CASE("conjugation") {
  LieAlgebraBasis squares = symmetry_lie_algebra(read_ideal_file(data_path("sum_of_squares.ideal")));
  CHECK(conjugate_basis(squares.basis, Matrix::identity(3)) == squares.basis);
  CHECK(diagonal_subalgebra_dim(squares.basis) == 1);
  Matrix b = read_matrix_file(data_path("sum_of_squares_B.matrix"));
  auto conj = conjugate_basis(squares.basis, b);
  CHECK(diagonal_subalgebra_dim(conj) == 2);
  Scalar i = Scalar::i();
  Matrix target = diag({0, -i, i});
  RowEchelon span(9);
  for (const Matrix& m : conj) span.insert(m.flatten());
  CHECK(span.in_span(target.flatten()));
  auto displayed = conjugate_basis(read_matrix_list_file(data_path("bases/sum_of_squares.basis")), b);
  CHECK(std::find(displayed.begin(), displayed.end(), target) != displayed.end());
  CHECK_THROWS_AS(conjugate_basis(squares.basis, Matrix(3, 3)), std::domain_error);

  LieAlgebraBasis colored = symmetry_lie_algebra(read_ideal_file(data_path("colored_path.ideal")));
  auto cc = conjugate_basis(colored.basis, read_matrix_file(data_path("colored_path_B.matrix")));
  CHECK(diagonal_subalgebra_dim(cc) == 4);
}

TEST_CASE("conjugation covariance fixes the orientation") {
  // I o B is the ideal of p(Bx); its algebra is B^-1 g_I B.
  Rng rng(77);
  IdealSpec quad = ideal_of(xring(2), {"x1^2 + x2^2 + x1*x2"});
  LieAlgebraBasis base = symmetry_lie_algebra(quad);
  bool other_orientation_fails = false;
  for (int t = 0; t < 20; ++t) {
    Matrix b = rng.invertible(2, -3, 3);
    IdealSpec moved = make_ideal(quad.ring, {change_variables(quad.generators[0], b)});
    LieAlgebraBasis algebra = symmetry_lie_algebra(moved);
    CHECK(algebra.dimension() == base.dimension());
    for (const Matrix& a : conjugate_basis(base.basis, b)) CHECK(membership(algebra, a));
    for (const Matrix& a : conjugate_basis(base.basis, inverse(b)))
      if (!membership(algebra, a)) other_orientation_fails = true;
  }
  CHECK(other_orientation_fails);
}

TEST_CASE("permuting variables permutes the algebra") {
  IdealSpec ideal = read_ideal_file(data_path("staged_tree_8.ideal"));
  Matrix perm(8, 8);
  for (std::size_t k = 0; k < 8; ++k) perm(k, (k + 3) % 8) = 1;
  std::vector<Polynomial> moved;
  for (const auto& g : ideal.generators) moved.push_back(change_variables(g, perm));
  LieAlgebraBasis permuted = symmetry_lie_algebra(make_ideal(ideal.ring, moved));
  LieAlgebraBasis base = symmetry_lie_algebra(ideal);
  CHECK(permuted.dimension() == base.dimension());
  for (const Matrix& a : conjugate_basis(base.basis, perm)) CHECK(membership(permuted, a));
}
