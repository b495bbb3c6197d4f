#include "symlie/graded.hpp"

#include <algorithm>

namespace symlie {

int IdealSpec::max_degree() const {
  int d = 0;
  for (const auto& g : generators) d = std::max(d, g.degree());
  return d;
}

int IdealSpec::min_degree() const {
  int d = generators.empty() ? 0 : generators.front().degree();
  for (const auto& g : generators) d = std::min(d, g.degree());
  return d;
}

IdealSpec make_ideal(RingPtr ring, std::vector<Polynomial> generators, bool asserted_prime) {
  if (!ring || ring->arity() == 0) throw PreconditionError("ring must declare at least one variable");
  if (generators.empty()) throw PreconditionError("ideal needs at least one generator");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Polynomial& g = generators[i];
    if (!(*g.ring() == *ring)) throw PreconditionError("generator " + std::to_string(i + 1) + " is not in the ideal's ring");
    if (g.is_zero()) throw PreconditionError("generator " + std::to_string(i + 1) + " is zero");
    if (!g.homogeneous_degree()) throw PreconditionError("generator " + std::to_string(i + 1) + " is not homogeneous");
  }
  return IdealSpec{std::move(ring), std::move(generators), asserted_prime};
}

std::vector<Polynomial> spanning_set(const IdealSpec& ideal, int d) {
  std::vector<Polynomial> out;
  std::size_t n = ideal.ring->arity();
  for (const auto& p : ideal.generators) {
    int e = p.degree();
    if (e > d) continue;
    for (const auto& m : monomial_basis(n, d - e)) out.push_back(p.shifted(m));
  }
  return out;
}

GradedBasis graded_basis(const IdealSpec& ideal, int d) {
  if (d < 0) throw std::invalid_argument("graded_basis: negative degree");
  MonomialFrame frame(ideal.ring->arity(), d);
  GradedBasis basis{d, frame, {}, {}, RowEchelon(frame.size())};
  for (auto& p : spanning_set(ideal, d)) {
    Vector v = frame.vectorize(p);
    if (basis.span.insert(v)) {
      basis.members.push_back(std::move(p));
      basis.member_vectors.push_back(std::move(v));
    }
  }
  return basis;
}

}  // namespace symlie
