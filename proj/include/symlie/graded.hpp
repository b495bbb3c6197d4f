#pragma once

#include "symlie/matrix.hpp"
#include "symlie/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace symlie {

// Raised when an input violates a documented precondition (inhomogeneous
// generator, unit ideal, size bounds, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A homogeneous ideal given by generators, kept in input order.
struct IdealSpec {
  RingPtr ring;
  std::vector<Polynomial> generators;
  // User assertion; never verified.
  bool asserted_prime = true;

  int max_degree() const;
  int min_degree() const;
};

// Validates: nonempty ring, nonempty generator list, every generator
// nonzero, homogeneous and in `ring`.
IdealSpec make_ideal(RingPtr ring, std::vector<Polynomial> generators, bool asserted_prime = true);

// Basis of [I]_d chosen greedily from the spanning set.
struct GradedBasis {
  int degree = 0;
  MonomialFrame frame;
  std::vector<Polynomial> members;
  std::vector<Vector> member_vectors;
  // Echelon form of member_vectors, used to reduce against [I]_d.
  RowEchelon span;

  std::size_t rank() const { return members.size(); }
};

// All m * p_i with m ranging over the ascending degree-(d - deg p_i)
// monomials; generator order major.
std::vector<Polynomial> spanning_set(const IdealSpec& ideal, int d);

GradedBasis graded_basis(const IdealSpec& ideal, int d);

}  // namespace symlie
