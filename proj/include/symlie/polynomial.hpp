#pragma once

#include "symlie/scalar.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace symlie {

using Exponent = std::uint32_t;

// Degree reported for the zero polynomial ("minus infinity").
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t arity) { return Monomial(std::vector<Exponent>(arity, 0)); }
  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exps_.size(); }
  int degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& o) const;
  // Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

// Graded reverse lexicographic order, variable 0 greatest.
bool grevlex_less(const Monomial& a, const Monomial& b);
// Lexicographic order, variable 0 greatest.
bool lex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

// Ordered variable names; declaration order is precedence (first is greatest).
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& variables() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables);
bool is_identifier(std::string_view s);

class Polynomial {
 public:
  // Canonical term order: descending grevlex.
  using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Total degree, kZeroDegree for the zero polynomial.
  int degree() const;
  // Common degree of all terms; nullopt when inhomogeneous; kZeroDegree for zero.
  std::optional<int> homogeneous_degree() const;

  Scalar coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Multiply by a monomial times a scalar.
  Polynomial shifted(const Monomial& m, const Scalar& c = Scalar(1)) const;

  // Canonical text, parseable by parse_polynomial.
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  TermMap terms_;
};

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

// Ring homomorphism x_j -> images[j]; images live in `target`.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, const RingPtr& target);

// Re-expresses p in another ring by variable name. Throws when a used
// variable is absent from `target`.
Polynomial rename_into(const Polynomial& p, const RingPtr& target);

// True iff every generator has at most two terms.
bool is_binomial_set(std::span<const Polynomial> gens);

// All degree-d monomials in `arity` variables, ascending grevlex.
std::vector<Monomial> monomial_basis(std::size_t arity, int d);

// Coordinate frame for [R]_d against the ascending grevlex basis.
class MonomialFrame {
 public:
  MonomialFrame(std::size_t arity, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& monomials() const { return basis_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  // Throws std::invalid_argument for polynomials not homogeneous of this degree.
  std::vector<Scalar> vectorize(const Polynomial& p) const;
  Polynomial devectorize(const RingPtr& ring, std::span<const Scalar> coords) const;

 private:
  int degree_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, GrevlexLess> index_;
};

std::vector<Scalar> vectorize(const Polynomial& p, int d);

}  // namespace symlie
