#include "symlie/groebner.hpp"
#include "symlie/models.hpp"

namespace symlie {

IdealSpec kernel_via_elimination(std::span<const Polynomial> images, std::span<const Polynomial> relations,
                                 const std::vector<std::string>& x_names, std::size_t max_variables) {
  if (images.size() != x_names.size()) throw std::invalid_argument("kernel_via_elimination: one image per x variable");
  if (images.empty()) throw std::invalid_argument("kernel_via_elimination: no images");
  const RingPtr& params = images.front().ring();
  std::size_t total = params->arity() + x_names.size();
  if (total > max_variables)
    throw PreconditionError("too large for naive elimination: " + std::to_string(total) + " variables (limit " +
                            std::to_string(max_variables) + ")");
  std::vector<std::string> names = params->variables();
  names.insert(names.end(), x_names.begin(), x_names.end());
  RingPtr joint = make_ring(names);

  std::vector<Polynomial> gens;
  for (std::size_t r = 0; r < images.size(); ++r) {
    Polynomial x = Polynomial::variable(joint, params->arity() + r);
    gens.push_back(x - rename_into(images[r], joint));
  }
  for (const auto& rel : relations) gens.push_back(rename_into(rel, joint));

  EliminationResult res = elimination_ideal(gens, params->variables());
  RingPtr x_ring = make_ring(x_names);
  IdealSpec kernel{x_ring, {}, true};
  for (const auto& g : res.generators) kernel.generators.push_back(rename_into(g, x_ring));
  return kernel;
}

IdealSpec staged_tree_kernel(const StagedTree& tree, std::size_t max_variables) {
  StagedParametrization par = staged_tree_parametrization(tree);
  std::vector<std::string> x_names;
  for (std::size_t r = 1; r <= par.images.size(); ++r) x_names.push_back("x" + std::to_string(r));
  return kernel_via_elimination(par.images, par.stage_relations(), x_names, max_variables);
}

}  // namespace symlie
