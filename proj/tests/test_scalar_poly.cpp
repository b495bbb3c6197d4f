#include "doctest.h"
#include "support.hpp"

#include "symlie/groebner.hpp"

using namespace symlie;
using namespace symlie::testing;

TEST_CASE("scalar field laws hold exactly") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    CHECK(a - a == Scalar(0));
  }
}

TEST_CASE("scalar basics") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(3, -6).to_string() == "-1/2");
  CHECK(i.to_string() == "i");
  CHECK((-i).to_string() == "-i");
  CHECK((Scalar(2) * i).to_string() == "2*i");
  CHECK((Scalar(1, 2) + Scalar(-3, 4) * i).to_string() == "1/2-3/4*i");
  CHECK((Scalar(1) + i).inverse() == Scalar(1, 2) - Scalar(1, 2) * i);
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
  Scalar acc = 5;
  acc.sub_mul(Scalar(2), Scalar(3));
  CHECK(acc == Scalar(-1));
  acc.sub_mul(i, i);
  CHECK(acc == Scalar(0));
}

TEST_CASE("parse examples") {
  auto r8 = xring(8);
  Polynomial p = P("(x1+x2)*x8 - (x3+x4)*x7", r8);
  Polynomial expect(r8);
  expect.add_term(Monomial({1, 0, 0, 0, 0, 0, 0, 1}), 1);
  expect.add_term(Monomial({0, 1, 0, 0, 0, 0, 0, 1}), 1);
  expect.add_term(Monomial({0, 0, 1, 0, 0, 0, 1, 0}), -1);
  expect.add_term(Monomial({0, 0, 0, 1, 0, 0, 1, 0}), -1);
  CHECK(p == expect);
  CHECK(P("0", r8).is_zero());
  CHECK(P("x1 - x1", r8).is_zero());
}

TEST_CASE("square of a difference matches pointwise evaluation") {
  auto r2 = xring(2);
  Polynomial p = P("(x1 - x2)^2", r2);
  CHECK(p.num_terms() == 3);
  CHECK(p.coefficient(Monomial({1, 1})) == Scalar(-2));
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Scalar a = rng.scalar(), b = rng.scalar();
    CHECK(evaluate(p, {a, b}) == (a - b) * (a - b));
  }
}

TEST_CASE("parse errors report position") {
  auto r2 = xring(2);
  try {
    parse_polynomial("x1 + y", r2, 3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_polynomial("x1 x2", r2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 +", r2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x1", r2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^", r2), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", r2), ParseError);
  CHECK_THROWS_AS(make_ring({"x", "i"}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({"x", "x"}), std::invalid_argument);
}

TEST_CASE("print then parse is the identity") {
  Rng rng(21);
  auto ring = make_ring({"a", "b_1", "c"});
  for (int t = 0; t < 200; ++t) {
    Polynomial p = rng.any(ring, 4, 6);
    Polynomial complex_part = rng.any(ring, 2, 2) * rng.scalar();
    p += complex_part;
    CHECK(parse_polynomial(p.to_string(), ring) == p);
  }
  auto r2 = xring(2);
  CHECK(P("-x1 + 2*i*x2^3", r2).to_string() == "2*i*x2^3 - x1");
  CHECK(P("x1 - 3 + 2*i", r2).to_string() == "x1 - (3-2*i)");
  CHECK(P("-3 - 2*i", r2).to_string() == "-(3+2*i)");
  CHECK(P("3 - 2*i", r2).to_string() == "3-2*i");
}

TEST_CASE("homogeneity") {
  auto r3 = xring(3);
  CHECK(P("x1*x3 - x2*x3 - x2^2", r3).homogeneous_degree() == 2);
  CHECK_FALSE(P("x1 + x1^2", r3).homogeneous_degree().has_value());
  CHECK(P("0", r3).homogeneous_degree() == kZeroDegree);
  CHECK(P("0", r3).degree() == kZeroDegree);
}

TEST_CASE("binomial sets") {
  auto s = make_ring({"s11", "s12", "s22", "s13", "s23", "s33"});
  std::vector<Polynomial> q = {P("i*s12^2 + s11*s33", s), P("i*s22^2 - s13*s33", s)};
  CHECK(is_binomial_set(q));
  auto r2 = xring(2);
  std::vector<Polynomial> trinomial = {P("x1^2 + x2^2 + x1*x2", r2)};
  CHECK_FALSE(is_binomial_set(trinomial));
  CHECK(is_binomial_set(std::vector<Polynomial>{}));
}

TEST_CASE("change of variables examples") {
  auto r2 = xring(2);
  Matrix b = int_matrix({{1, 1}, {1, -1}});
  CHECK(change_variables(P("x1^2 - x2^2", r2), b) == P("4*x1*x2", r2));
  Polynomial p = P("x1^3 - 7*x1*x2^2 + x2", r2);
  CHECK(change_variables(p, Matrix::identity(2)) == p);
  CHECK_THROWS_AS(change_variables(p, int_matrix({{1, 2}, {2, 4}})), std::invalid_argument);
  CHECK_THROWS_AS(change_variables(p, Matrix::identity(3)), std::invalid_argument);
}

TEST_CASE("change of variables on the colored model") {
  IdealSpec ideal = read_ideal_file(data_path("colored_path.ideal"));
  Matrix b = read_matrix_file(data_path("colored_path_B.matrix"));
  const auto& s = ideal.ring;
  Polynomial p1 = change_variables(ideal.generators[0], b);
  Polynomial p2 = change_variables(ideal.generators[1], b);
  CHECK(p1 == P("-i*s12^2 + i*s22^2 - s11*s33 - s13*s33", s));
  CHECK(p2 == P("-2*s12^2 - 2*s22^2 + 2*i*s11*s33 - 2*i*s13*s33", s));
}

TEST_CASE("change of variables composes as C*B") {
  // With x_i -> sum_j B_ij y_j, substituting C first and then B is the
  // substitution by the product C*B.
  Rng rng(3);
  auto r2 = xring(2);
  Polynomial p = P("x1^2*x2 - 3*x2^3 + x1", r2);
  Matrix b = int_matrix({{1, 2}, {0, 1}});
  Matrix c = int_matrix({{0, 1}, {1, 1}});
  CHECK(change_variables(change_variables(p, c), b) == change_variables(p, c * b));
  CHECK(change_variables(change_variables(p, c), b) != change_variables(p, b * c));
  auto r3 = xring(3);
  for (int t = 0; t < 20; ++t) {
    Polynomial q = rng.any(r3, 3, 5);
    Matrix bb = rng.invertible(3, -2, 2), cc = rng.invertible(3, -2, 2);
    CHECK(change_variables(change_variables(q, cc), bb) == change_variables(q, cc * bb));
  }
}

TEST_CASE("change of variables is a ring map") {
  Rng rng(8);
  auto r3 = xring(3);
  for (int t = 0; t < 20; ++t) {
    Polynomial p = rng.homogeneous(r3, 2, 4), q = rng.any(r3, 2, 4);
    Matrix b = rng.invertible(3, -3, 3);
    CHECK(change_variables(p * q, b) == change_variables(p, b) * change_variables(q, b));
    CHECK(change_variables(p + q, b) == change_variables(p, b) + change_variables(q, b));
    CHECK(change_variables(p, b).homogeneous_degree() == 2);
  }
}

TEST_CASE("partial derivatives") {
  auto r3 = xring(3);
  CHECK(partial_derivative(P("x1^2*x2", r3), 0) == P("2*x1*x2", r3));
  CHECK(partial_derivative(P("5", r3), 0).is_zero());
  CHECK(partial_derivative(P("x1*x3 - x2*x3 - x2^2", r3), 1) == P("-x3 - 2*x2", r3));
}

TEST_CASE("monomial basis order and size") {
  auto names = [](const std::vector<Monomial>& ms, const PolyRing& ring) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(monomial_to_string(m, ring));
    return out;
  };
  auto r3 = xring(3);
  CHECK(names(monomial_basis(3, 2), *r3) ==
        std::vector<std::string>{"x3^2", "x2*x3", "x1*x3", "x2^2", "x1*x2", "x1^2"});
  CHECK(names(monomial_basis(1, 3), *xring(1)) == std::vector<std::string>{"x1^3"});
  CHECK(names(monomial_basis(2, 1), *xring(2)) == std::vector<std::string>{"x2", "x1"});
  auto binom = [](long n, long k) {
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d) {
      auto basis = monomial_basis(n, d);
      CHECK(static_cast<long>(basis.size()) == binom(static_cast<long>(n) + d - 1, d));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        CHECK(basis[k].degree() == d);
        if (k > 0) CHECK(grevlex_less(basis[k - 1], basis[k]));
      }
    }
}

TEST_CASE("vectorize against the ascending frame") {
  auto r3 = xring(3);
  std::vector<Scalar> expect = {0, -1, 2, 0, 0, 1};
  CHECK(vectorize(P("x1^2 + 2*x1*x3 - x2*x3", r3), 2) == expect);
  CHECK(vectorize(P("0", r3), 2) == std::vector<Scalar>(6));
  CHECK(vectorize(P("x2^2", xring(2)), 2) == std::vector<Scalar>{1, 0, 0});
  CHECK_THROWS_AS(vectorize(P("x1 + x1^2", r3), 2), std::invalid_argument);
  CHECK_THROWS_AS(vectorize(P("x1", r3), 2), std::invalid_argument);
}

TEST_CASE("vectorize is linear and invertible") {
  Rng rng(2);
  auto r3 = xring(3);
  MonomialFrame frame(3, 3);
  for (int t = 0; t < 50; ++t) {
    Polynomial p = rng.homogeneous(r3, 3, 5), q = rng.homogeneous(r3, 3, 5);
    Scalar a = rng.scalar(), b = rng.scalar();
    auto vp = frame.vectorize(p), vq = frame.vectorize(q), vs = frame.vectorize(p * a + q * b);
    for (std::size_t k = 0; k < vs.size(); ++k) CHECK(vs[k] == a * vp[k] + b * vq[k]);
    CHECK(frame.devectorize(r3, vp) == p);
  }
}

TEST_CASE("matrix helpers") {
  Matrix a = int_matrix({{1, 2}, {3, 4}});
  CHECK(determinant(a) == Scalar(-2));
  CHECK(a * inverse(a) == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(int_matrix({{1, 2}, {2, 4}})), std::domain_error);
  CHECK(rank({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}}, 3) == 2);
  RowEchelon e(3);
  e.insert({1, 2, 3});
  auto null = e.nullspace();
  REQUIRE(null.size() == 2);
  CHECK(null[0] == Vector{-2, 1, 0});
  CHECK(null[1] == Vector{-3, 0, 1});
}

TEST_CASE("matrix list files") {
  auto ms = parse_matrix_list_text("# two\n1, 0\n0, 1\n\n\n0, i\n-i, 0\n");
  REQUIRE(ms.size() == 2);
  CHECK(ms[1](0, 1) == Scalar::i());
  try {
    parse_matrix_list_text("1, 0\n0, 1\n\n1, 0\n0, x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}
