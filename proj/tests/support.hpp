#pragma once

#include "symlie/graded.hpp"
#include "symlie/io.hpp"
#include "symlie/matrix.hpp"
#include "symlie/parser.hpp"
#include "symlie/polynomial.hpp"

#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace symlie::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(SYMLIE_DATA_DIR) / name;
}

inline RingPtr xring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  return make_ring(names);
}

inline Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

inline IdealSpec ideal_of(const RingPtr& ring, const std::vector<std::string>& gens, bool prime = true) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, ring));
  return make_ideal(ring, ps, prime);
}

inline Matrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return Matrix::from_rows(out);
}

// Horner-free evaluation straight from the term map.
inline Scalar evaluate(const Polynomial& p, const std::vector<Scalar>& point) {
  Scalar total;
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (std::size_t v = 0; v < m.arity(); ++v)
      for (Exponent e = 0; e < m[v]; ++e) t *= point[v];
    total += t;
  }
  return total;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Scalar scalar() {
    // Gaussian rationals with small parts.
    mpq_class re(integer(-9, 9), integer(1, 5));
    mpq_class im(integer(-9, 9), integer(1, 5));
    re.canonicalize();
    im.canonicalize();
    if (integer(0, 2) == 0) im = 0;
    return Scalar(re, im);
  }
  Matrix int_matrix(std::size_t n, long lo, long hi) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = integer(lo, hi);
    return m;
  }
  Matrix invertible(std::size_t n, long lo, long hi) {
    while (true) {
      Matrix m = int_matrix(n, lo, hi);
      if (!determinant(m).is_zero()) return m;
    }
  }
  // Random homogeneous polynomial of degree d with about `terms` terms.
  Polynomial homogeneous(const RingPtr& ring, int d, std::size_t terms) {
    auto basis = monomial_basis(ring->arity(), d);
    Polynomial p(ring);
    while (p.is_zero())
      for (std::size_t k = 0; k < terms; ++k)
        p.add_term(basis[static_cast<std::size_t>(integer(0, static_cast<long>(basis.size()) - 1))],
                   integer(-5, 5));
    return p;
  }
  Polynomial any(const RingPtr& ring, int max_degree, std::size_t terms) {
    Polynomial p(ring);
    for (std::size_t k = 0; k < terms; ++k) {
      std::vector<Exponent> e(ring->arity());
      int budget = static_cast<int>(integer(0, max_degree));
      for (int s = 0; s < budget; ++s) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(e.size()) - 1))];
      p.add_term(Monomial(e), integer(-4, 4));
    }
    return p;
  }
};

// Star action built only from the three defining rules: g * c = 0,
// g * x_a = -sum_b g_ab x_b, and the product rule, peeling one variable
// off each monomial at a time.
inline Polynomial star_by_rules(const Matrix& g, const Polynomial& p) {
  const RingPtr& ring = p.ring();
  const std::size_t n = ring->arity();
  auto on_variable = [&](std::size_t a) {
    Polynomial out(ring);
    for (std::size_t b = 0; b < n; ++b) out -= Polynomial::variable(ring, b) * g(a, b);
    return out;
  };
  std::function<Polynomial(const Monomial&)> on_monomial = [&](const Monomial& m) -> Polynomial {
    if (m.is_one()) return Polynomial(ring);
    std::size_t a = 0;
    while (m[a] == 0) ++a;
    Monomial rest = m / Monomial::variable(n, a);
    Polynomial xa = Polynomial::variable(ring, a);
    Polynomial rest_poly = Polynomial::term(ring, rest, 1);
    return on_variable(a) * rest_poly + xa * on_monomial(rest);
  };
  Polynomial out(ring);
  for (const auto& [m, c] : p.terms()) out += on_monomial(m) * c;
  return out;
}

}  // namespace symlie::testing

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<symlie::Polynomial> {
  static String convert(const symlie::Polynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<symlie::Scalar> {
  static String convert(const symlie::Scalar& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<symlie::Matrix> {
  static String convert(const symlie::Matrix& m) { return m.to_string().c_str(); }
};
}  // namespace doctest
#endif
