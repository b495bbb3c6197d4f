#include "symlie/lie.hpp"

#include <stdexcept>

namespace symlie {

Polynomial star_action(const Matrix& g, const Polynomial& p) {
  std::size_t n = p.ring()->arity();
  if (!g.is_square() || g.rows() != n) throw std::invalid_argument("star_action: matrix size does not match ring arity");
  Polynomial result(p.ring());
  for (std::size_t a = 0; a < n; ++a) {
    Polynomial da = partial_derivative(p, a);
    if (da.is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (g(a, b).is_zero()) continue;
      result += da.shifted(Monomial::variable(n, b), -g(a, b));
    }
  }
  return result;
}

void stack_degree(StabilizerSystem& system, const IdealSpec& ideal, int d, KernelMode mode) {
  std::size_t n = system.n;
  GradedBasis basis = graded_basis(ideal, d);
  system.degrees.push_back(d);
  system.graded_ranks.push_back(basis.rank());
  if (basis.rank() == 0) {
    system.empty_component = true;
    return;
  }
  ResidualTable table = mode == KernelMode::kParallel ? residual_table_parallel(basis, ideal.ring)
                                                       : residual_table_serial(basis, ideal.ring);
  std::size_t unknowns = n * n;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t c = 0; c < basis.frame.size(); ++c) {
      Vector row(unknowns);
      bool nonzero = false;
      for (std::size_t u = 0; u < unknowns; ++u) {
        row[u] = table[i][u][c];
        nonzero = nonzero || !row[u].is_zero();
      }
      if (!nonzero) continue;
      ++system.raw_rows;
      system.constraints.insert(std::move(row));
    }
  }
}

StabilizerSystem stabilizer_system(const IdealSpec& ideal, int d, const StabilizerOptions& options) {
  if (d < ideal.max_degree() && !options.graded_only)
    throw PreconditionError("degree " + std::to_string(d) + " is below the largest generator degree " +
                            std::to_string(ideal.max_degree()) + "; pass graded-only to compute the graded stabilizer");
  StabilizerSystem system;
  system.n = ideal.ring->arity();
  system.graded_only = d < ideal.max_degree();
  system.constraints = RowEchelon(system.n * system.n);
  stack_degree(system, ideal, d, options.mode);
  return system;
}

LieAlgebraBasis lie_algebra_from_system(const StabilizerSystem& system) {
  LieAlgebraBasis algebra;
  algebra.n = system.n;
  for (const auto& v : system.constraints.nullspace()) algebra.basis.push_back(Matrix::from_flat(system.n, v));
  algebra.degree_used = system.degrees.empty() ? 0 : system.degrees.back();
  algebra.graded_rank = system.graded_ranks.empty() ? 0 : system.graded_ranks.back();
  algebra.system_rows = system.raw_rows;
  algebra.empty_component = system.empty_component;
  algebra.graded_only = system.graded_only;
  return algebra;
}

LieAlgebraBasis symmetry_lie_algebra(const IdealSpec& ideal, const StabilizerOptions& options) {
  return symmetry_lie_algebra_at_degree(ideal, ideal.max_degree(), options);
}

LieAlgebraBasis symmetry_lie_algebra_at_degree(const IdealSpec& ideal, int d, const StabilizerOptions& options) {
  if (ideal.generators.empty()) throw PreconditionError("ideal needs at least one generator");
  for (const auto& g : ideal.generators)
    if (!g.homogeneous_degree()) throw PreconditionError("generator is not homogeneous");
  return lie_algebra_from_system(stabilizer_system(ideal, d, options));
}

LieAlgebraBasis symmetry_lie_algebra_multidegree(const IdealSpec& ideal, std::span<const int> degrees, KernelMode mode) {
  if (degrees.empty()) throw std::invalid_argument("multidegree stabilizer needs at least one degree");
  StabilizerSystem system;
  system.n = ideal.ring->arity();
  system.constraints = RowEchelon(system.n * system.n);
  int top = 0;
  for (int d : degrees) {
    stack_degree(system, ideal, d, mode);
    top = std::max(top, d);
  }
  system.graded_only = top < ideal.max_degree();
  LieAlgebraBasis algebra = lie_algebra_from_system(system);
  algebra.degree_used = top;
  return algebra;
}

namespace {

RowEchelon span_of(std::span<const Matrix> basis, std::size_t n) {
  RowEchelon e(n * n);
  for (const auto& m : basis) e.insert(m.flatten());
  return e;
}

void check_size(const Matrix& a, std::size_t n) {
  if (!a.is_square() || a.rows() != n) throw std::invalid_argument("matrix size does not match the algebra");
}

}  // namespace

bool membership(const LieAlgebraBasis& algebra, const Matrix& a) {
  check_size(a, algebra.n);
  return span_of(algebra.basis, algebra.n).in_span(a.flatten());
}

bool satisfies(const StabilizerSystem& system, const Matrix& a) {
  check_size(a, system.n);
  Vector x = a.flatten();
  for (const auto& row : system.constraints.reduced_rows()) {
    Scalar dot;
    for (std::size_t u = 0; u < x.size(); ++u)
      if (!row[u].is_zero() && !x[u].is_zero()) dot += row[u] * x[u];
    if (!dot.is_zero()) return false;
  }
  return true;
}

bool bracket_closure_check(const LieAlgebraBasis& algebra) {
  RowEchelon span = span_of(algebra.basis, algebra.n);
  for (std::size_t i = 0; i < algebra.basis.size(); ++i)
    for (std::size_t j = i + 1; j < algebra.basis.size(); ++j)
      if (!span.in_span(commutator(algebra.basis[i], algebra.basis[j]).flatten())) return false;
  return true;
}

std::vector<Matrix> conjugate_basis(std::span<const Matrix> basis, const Matrix& b) {
  Matrix b_inv = inverse(b);
  std::vector<Matrix> out;
  out.reserve(basis.size());
  for (const auto& a : basis) out.push_back(b_inv * a * b);
  return out;
}

std::size_t diagonal_subalgebra_dim(std::span<const Matrix> basis) {
  if (basis.empty()) return 0;
  std::size_t n = basis.front().rows();
  // Independent spanning vectors, then the rank of their off-diagonal part.
  std::vector<Vector> independent = span_of(basis, n).reduced_rows();
  RowEchelon off(independent.size());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c) continue;
      Vector row(independent.size());
      for (std::size_t k = 0; k < independent.size(); ++k) row[k] = independent[k][r * n + c];
      off.insert(std::move(row));
    }
  return independent.size() - off.rank();
}

}  // namespace symlie
