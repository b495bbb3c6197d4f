#pragma once

#include "symlie/graded.hpp"
#include "symlie/matrix.hpp"
#include "symlie/stabilizer_kernels.hpp"

#include <span>
#include <vector>

namespace symlie {

// g * p = -sum_{a,b} g_ab x_b dp/dx_a, the derivation with g * c = 0 and
// g * x_a = -sum_b g_ab x_b.
Polynomial star_action(const Matrix& g, const Polynomial& p);

enum class KernelMode { kSerial, kParallel };

struct StabilizerOptions {
  // Permit a degree below the largest generator degree; the result is then
  // the stabilizer of [I]_d only.
  bool graded_only = false;
  KernelMode mode = KernelMode::kParallel;
};

// Linear constraints on the n^2 unknowns g_11, g_12, ..., g_nn (row-major)
// whose solution set is {g | g * [I]_d within [I]_d}. Stored in echelon form.
struct StabilizerSystem {
  std::size_t n = 0;
  std::vector<int> degrees;
  std::vector<std::size_t> graded_ranks;
  // Nonzero constraint rows fed to the echelon form.
  std::size_t raw_rows = 0;
  // Some requested [I]_d was zero, so it imposed no constraint.
  bool empty_component = false;
  bool graded_only = false;
  RowEchelon constraints{0};
};

StabilizerSystem stabilizer_system(const IdealSpec& ideal, int d, const StabilizerOptions& options = {});

// Appends the constraints of degree d to an existing system.
void stack_degree(StabilizerSystem& system, const IdealSpec& ideal, int d, KernelMode mode);

struct LieAlgebraBasis {
  std::size_t n = 0;
  // Canonical: nullspace vectors in reduced parameterization over the
  // row-major unknowns, leading free entry 1.
  std::vector<Matrix> basis;
  int degree_used = 0;
  std::size_t graded_rank = 0;
  std::size_t system_rows = 0;
  bool empty_component = false;
  bool graded_only = false;

  std::size_t dimension() const { return basis.size(); }
};

LieAlgebraBasis lie_algebra_from_system(const StabilizerSystem& system);

// Uses d = largest generator degree.
LieAlgebraBasis symmetry_lie_algebra(const IdealSpec& ideal, const StabilizerOptions& options = {});
LieAlgebraBasis symmetry_lie_algebra_at_degree(const IdealSpec& ideal, int d,
                                               const StabilizerOptions& options = {});
// Intersection of the stabilizers of [I]_d over all listed degrees.
LieAlgebraBasis symmetry_lie_algebra_multidegree(const IdealSpec& ideal, std::span<const int> degrees,
                                                 KernelMode mode = KernelMode::kParallel);

bool membership(const LieAlgebraBasis& algebra, const Matrix& a);
bool satisfies(const StabilizerSystem& system, const Matrix& a);
bool bracket_closure_check(const LieAlgebraBasis& algebra);

// B^-1 A B for every A. Throws std::domain_error for singular B.
std::vector<Matrix> conjugate_basis(std::span<const Matrix> basis, const Matrix& b);

// dim {A in span(basis) | A diagonal}.
std::size_t diagonal_subalgebra_dim(std::span<const Matrix> basis);

}  // namespace symlie
