#include "symlie/stabilizer_kernels.hpp"

#include <omp.h>

namespace symlie {

Polynomial elementary_star(std::size_t a, std::size_t b, const Polynomial& p) {
  std::size_t n = p.ring()->arity();
  return partial_derivative(p, a).shifted(Monomial::variable(n, b), Scalar(-1));
}

namespace {

Vector residual_entry(const GradedBasis& basis, std::size_t i, std::size_t a, std::size_t b) {
  return basis.span.reduce(basis.frame.vectorize(elementary_star(a, b, basis.members[i])));
}

ResidualTable empty_table(const GradedBasis& basis, std::size_t n) {
  return ResidualTable(basis.rank(), std::vector<Vector>(n * n));
}

}  // namespace

ResidualTable residual_table_serial(const GradedBasis& basis, const RingPtr& ring) {
  std::size_t n = ring->arity();
  ResidualTable table = empty_table(basis, n);
  for (std::size_t i = 0; i < basis.rank(); ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[i][a * n + b] = residual_entry(basis, i, a, b);
  return table;
}

ResidualTable residual_table_parallel(const GradedBasis& basis, const RingPtr& ring) {
  std::size_t n = ring->arity();
  ResidualTable table = empty_table(basis, n);
  const long total = static_cast<long>(basis.rank() * n * n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long idx = 0; idx < total; ++idx) {
    std::size_t u = static_cast<std::size_t>(idx);
    std::size_t i = u / (n * n);
    std::size_t ab = u % (n * n);
    table[i][ab] = residual_entry(basis, i, ab / n, ab % n);
  }
  return table;
}

}  // namespace symlie
