#pragma once

#include "symlie/graded.hpp"
#include "symlie/matrix.hpp"

#include <vector>

namespace symlie {

// Residual table for the stabilizer system at one degree:
// table[i][a * n + b] is vec(E_ab * f_i) reduced against [I]_d, where f_i
// is the i-th member of the graded basis. The map g -> residual(g * f_i)
// is linear, so these columns assemble the constraint matrix.
using ResidualTable = std::vector<std::vector<Vector>>;

// Reference implementation, one (i, a, b) at a time.
ResidualTable residual_table_serial(const GradedBasis& basis, const RingPtr& ring);

// OpenMP over the flattened (i, a, b) index; each slot is written by
// exactly one iteration so the table is identical to the serial one.
ResidualTable residual_table_parallel(const GradedBasis& basis, const RingPtr& ring);

// E_ab * p = -x_b * dp/dx_a.
Polynomial elementary_star(std::size_t a, std::size_t b, const Polynomial& p);

}  // namespace symlie
