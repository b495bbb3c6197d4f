#pragma once

#include "symlie/graded.hpp"
#include "symlie/polynomial.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symlie {

// ---------------------------------------------------------------------------
// Staged trees

struct StagedTree {
  std::string root;
  // Children of each interior node, in listing order.
  std::map<std::string, std::vector<std::string>> children;
  // Interior node -> stage id.
  std::map<std::string, std::string> stage;

  // Leaves in depth-first order of the child listings: x_1, ..., x_n.
  std::vector<std::string> leaves() const;
};

// Text format:
//   tree:
//   edge <parent> <child>
//   stages:
//   <node> <stage-id>
// Throws ParseError on malformed input or an invalid tree.
StagedTree parse_staged_tree(std::string_view text);

// Rooted tree, every interior node staged, equal out-degree within a stage.
void validate(const StagedTree& tree);

struct StagedParametrization {
  // theta_<stage>_<k> for each stage (first appearance in preorder), then z.
  RingPtr parameter_ring;
  // Image of x_r for each leaf, in leaf order.
  std::vector<Polynomial> images;
  std::vector<std::string> stage_ids;
  // Parameter indices of each stage's labels, slot order.
  std::vector<std::vector<std::size_t>> stage_labels;
  std::size_t z_index = 0;

  // sum_k theta_{s,k} - z for every stage.
  std::vector<Polynomial> stage_relations() const;
  // Images after replacing each stage's last label by z minus the others.
  std::vector<Polynomial> reduced_images() const;
};

// x_r -> z^(n - depth(r)) * product of edge labels along the root path.
StagedParametrization staged_tree_parametrization(const StagedTree& tree);

// True per generator iff it vanishes under the parametrization modulo the
// stage-sum relations. Generators must live in a ring of arity n.
std::vector<bool> verify_staged_kernel(const StagedTree& tree, std::span<const Polynomial> generators);

// ---------------------------------------------------------------------------
// Gaussian graphical models

struct ColoredGraph {
  std::size_t vertices = 0;
  // 1-based, stored with first < second.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::map<std::size_t, std::string> vertex_colors;
  std::map<std::pair<std::size_t, std::size_t>, std::string> edge_colors;
};

// Text format:
//   vertices: <n>
//   edges: 1-2, 2-3
//   vertex_colors: 1:a 3:a        (optional)
//   edge_colors: 1-2:c 2-3:c      (optional)
ColoredGraph parse_graph(std::string_view text);

// s11, s12, s22, s13, s23, s33, ...: upper triangle, column by column.
RingPtr sigma_ring(std::size_t n);
// Position of sigma_ij (any order of i, j; 1-based) in sigma_ring(n).
std::size_t sigma_index(std::size_t i, std::size_t j);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

struct GaussianCofactorMap {
  // One k-variable per vertex/edge color class, named after the class's
  // first position in column order (k11, k12, ...).
  RingPtr k_ring;
  RingPtr sigma;
  PolyMatrix concentration;
  // adjugate[i][j] = (-1)^(i+j) det K with row j and column i removed.
  PolyMatrix adjugate;
  Polynomial determinant{RingPtr{}};
};

Polynomial polynomial_determinant(const PolyMatrix& m, const RingPtr& ring);

// Throws PreconditionError above max_vertices (cofactor expansion is exponential).
GaussianCofactorMap gaussian_cofactor_map(const ColoredGraph& graph, std::size_t max_vertices = 6);

// sigma_ij -> adj(K)_ij; true per generator iff the result is zero.
// Generators must be homogeneous in a ring of arity n(n+1)/2 (sigma order).
std::vector<bool> verify_gaussian_kernel(const ColoredGraph& graph, std::span<const Polynomial> generators);

// ---------------------------------------------------------------------------
// Kernels by elimination

// Kernel of x_r -> images[r] modulo `relations`, by eliminating every
// parameter variable from <x_r - images[r]> + <relations>. The result lives
// in a ring named by `x_names` and may have no generators.
// Throws PreconditionError when parameters plus x variables exceed max_variables.
IdealSpec kernel_via_elimination(std::span<const Polynomial> images, std::span<const Polynomial> relations,
                                 const std::vector<std::string>& x_names, std::size_t max_variables = 12);

// Convenience: the staged-tree kernel with x_1..x_n named x1, ..., xn.
IdealSpec staged_tree_kernel(const StagedTree& tree, std::size_t max_variables = 12);

}  // namespace symlie
