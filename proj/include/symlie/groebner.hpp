#pragma once

#include "symlie/graded.hpp"
#include "symlie/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace symlie {

struct MonomialOrder {
  enum class Kind { kGrevlex, kLex, kBlock };

  Kind kind = Kind::kGrevlex;
  // For kBlock: the first block_size variables form the eliminated block,
  // compared first by grevlex; ties broken by grevlex on the rest.
  std::size_t block_size = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::kLex, 0}; }
  static MonomialOrder block(std::size_t eliminated) { return {Kind::kBlock, eliminated}; }

  bool less(const Monomial& a, const Monomial& b) const;
};

// Polynomial with terms sorted descending under a given order.
struct OrderedPoly {
  std::vector<Monomial> monomials;
  std::vector<Scalar> coefficients;

  bool is_zero() const { return monomials.empty(); }
  std::size_t size() const { return monomials.size(); }
  const Monomial& lead() const { return monomials.front(); }
};

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<OrderedPoly> elements);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<OrderedPoly>& ordered_elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::vector<Polynomial> elements() const;
  // True when the basis is {1}.
  bool is_unit() const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<OrderedPoly> elements_;
  std::vector<Monomial> leading_;
};

// Remainder of p modulo G: no term divisible by a leading monomial of G.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

// Reduced, monic Groebner basis. Pairs are taken by smallest lcm degree
// (ties by index); coprime-leading-monomial and chain criteria skip pairs.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order);

bool ideal_membership(const Polynomial& p, const IdealSpec& ideal);

// Krull dimension of R/I (the affine cone), read off the leading-term ideal.
// Throws PreconditionError for the unit ideal.
int krull_dimension(const IdealSpec& ideal);
int krull_dimension(const GroebnerBasis& basis);

struct EliminationResult {
  RingPtr ring;  // the remaining variables, original precedence
  std::vector<Polynomial> generators;
};

// Generators of <generators> intersected with the subring free of the
// named variables, via a block order with those variables greatest.
EliminationResult elimination_ideal(std::span<const Polynomial> generators, std::span<const std::string> eliminate);

}  // namespace symlie
