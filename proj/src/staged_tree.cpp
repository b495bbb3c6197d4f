#include "symlie/models.hpp"
#include "symlie/parser.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace symlie {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool valid_stage_id(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

[[noreturn]] void malformed(const std::string& msg) { throw ParseError("malformed staged tree: " + msg, 0, 0); }

}  // namespace

std::vector<std::string> StagedTree::leaves() const {
  std::vector<std::string> out;
  std::function<void(const std::string&)> walk = [&](const std::string& v) {
    auto it = children.find(v);
    if (it == children.end() || it->second.empty()) {
      out.push_back(v);
      return;
    }
    for (const auto& c : it->second) walk(c);
  };
  if (!root.empty()) walk(root);
  return out;
}

StagedTree parse_staged_tree(std::string_view text) {
  StagedTree tree;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  enum class Section { kNone, kTree, kStages } section = Section::kNone;
  std::vector<std::string> order;  // nodes by first mention
  std::set<std::string> has_parent;
  auto mention = [&](const std::string& v) {
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(strip_comment(raw));
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 1 && tok[0] == "tree:") {
      section = Section::kTree;
      continue;
    }
    if (tok.size() == 1 && tok[0] == "stages:") {
      section = Section::kStages;
      continue;
    }
    if (section == Section::kTree) {
      if (tok.size() != 3 || tok[0] != "edge") throw ParseError("expected 'edge <parent> <child>'", line_no, 1);
      if (!has_parent.insert(tok[2]).second) throw ParseError("node '" + tok[2] + "' has two parents", line_no, 1);
      mention(tok[1]);
      mention(tok[2]);
      tree.children[tok[1]].push_back(tok[2]);
    } else if (section == Section::kStages) {
      if (tok.size() != 2) throw ParseError("expected '<node> <stage-id>'", line_no, 1);
      if (!valid_stage_id(tok[1])) throw ParseError("stage id must match [A-Za-z0-9_]+", line_no, 1);
      tree.stage[tok[0]] = tok[1];
    } else {
      throw ParseError("expected 'tree:' section first", line_no, 1);
    }
  }
  for (const auto& v : order) {
    if (!has_parent.count(v)) {
      if (!tree.root.empty()) malformed("more than one root ('" + tree.root + "', '" + v + "')");
      tree.root = v;
    }
  }
  if (tree.root.empty()) malformed("no root (empty tree or cycle)");
  validate(tree);
  return tree;
}

void validate(const StagedTree& tree) {
  if (tree.root.empty() || !tree.children.count(tree.root)) malformed("root has no children");
  // Reachability from the root must cover every node exactly once.
  std::set<std::string> seen;
  std::function<void(const std::string&)> walk = [&](const std::string& v) {
    if (!seen.insert(v).second) malformed("node '" + v + "' reached twice");
    auto it = tree.children.find(v);
    if (it != tree.children.end())
      for (const auto& c : it->second) walk(c);
  };
  walk(tree.root);
  for (const auto& [v, kids] : tree.children)
    if (!seen.count(v)) malformed("node '" + v + "' is not reachable from the root");

  std::map<std::string, std::size_t> stage_degree;
  for (const auto& [v, kids] : tree.children) {
    auto st = tree.stage.find(v);
    if (st == tree.stage.end()) malformed("interior node '" + v + "' has no stage");
    auto [it, inserted] = stage_degree.emplace(st->second, kids.size());
    if (!inserted && it->second != kids.size())
      malformed("stage '" + st->second + "' mixes out-degrees " + std::to_string(it->second) + " and " +
                std::to_string(kids.size()));
  }
  for (const auto& [v, s] : tree.stage)
    if (!tree.children.count(v)) malformed("stage assigned to leaf or unknown node '" + v + "'");
}

StagedParametrization staged_tree_parametrization(const StagedTree& tree) {
  validate(tree);
  StagedParametrization par;
  std::map<std::string, std::size_t> stage_pos;
  std::vector<std::string> names;
  // Stages in preorder of first appearance.
  std::function<void(const std::string&)> collect = [&](const std::string& v) {
    auto it = tree.children.find(v);
    if (it == tree.children.end()) return;
    const std::string& s = tree.stage.at(v);
    if (!stage_pos.count(s)) {
      stage_pos[s] = par.stage_ids.size();
      par.stage_ids.push_back(s);
      std::vector<std::size_t> labels;
      for (std::size_t k = 0; k < it->second.size(); ++k) {
        labels.push_back(names.size());
        names.push_back("theta_" + s + "_" + std::to_string(k));
      }
      par.stage_labels.push_back(std::move(labels));
    }
    for (const auto& c : it->second) collect(c);
  };
  collect(tree.root);
  par.z_index = names.size();
  names.emplace_back("z");
  par.parameter_ring = make_ring(names);

  std::vector<std::string> leaves = tree.leaves();
  std::size_t n = leaves.size();
  std::size_t arity = names.size();
  std::function<void(const std::string&, std::vector<Exponent>&, std::size_t)> walk =
      [&](const std::string& v, std::vector<Exponent>& exps, std::size_t depth) {
        auto it = tree.children.find(v);
        if (it == tree.children.end()) {
          std::vector<Exponent> e = exps;
          e[par.z_index] = static_cast<Exponent>(n - depth);
          par.images.push_back(Polynomial::term(par.parameter_ring, Monomial(std::move(e)), Scalar(1)));
          return;
        }
        const auto& labels = par.stage_labels[stage_pos.at(tree.stage.at(v))];
        for (std::size_t k = 0; k < it->second.size(); ++k) {
          ++exps[labels[k]];
          walk(it->second[k], exps, depth + 1);
          --exps[labels[k]];
        }
      };
  std::vector<Exponent> exps(arity, 0);
  walk(tree.root, exps, 0);
  return par;
}

std::vector<Polynomial> StagedParametrization::stage_relations() const {
  std::vector<Polynomial> rel;
  for (const auto& labels : stage_labels) {
    Polynomial r = -Polynomial::variable(parameter_ring, z_index);
    for (std::size_t l : labels) r += Polynomial::variable(parameter_ring, l);
    rel.push_back(std::move(r));
  }
  return rel;
}

std::vector<Polynomial> StagedParametrization::reduced_images() const {
  std::size_t arity = parameter_ring->arity();
  std::vector<Polynomial> sub;
  for (std::size_t v = 0; v < arity; ++v) sub.push_back(Polynomial::variable(parameter_ring, v));
  for (const auto& labels : stage_labels) {
    Polynomial last = Polynomial::variable(parameter_ring, z_index);
    for (std::size_t k = 0; k + 1 < labels.size(); ++k) last -= Polynomial::variable(parameter_ring, labels[k]);
    sub[labels.back()] = std::move(last);
  }
  std::vector<Polynomial> out;
  for (const auto& img : images) out.push_back(substitute(img, sub, parameter_ring));
  return out;
}

std::vector<bool> verify_staged_kernel(const StagedTree& tree, std::span<const Polynomial> generators) {
  StagedParametrization par = staged_tree_parametrization(tree);
  std::vector<Polynomial> images = par.reduced_images();
  std::vector<bool> out;
  for (const auto& g : generators) {
    if (g.ring()->arity() != images.size())
      throw std::invalid_argument("verify_staged_kernel: generator ring has " + std::to_string(g.ring()->arity()) +
                                  " variables, tree has " + std::to_string(images.size()) + " leaves");
    out.push_back(substitute(g, images, par.parameter_ring).is_zero());
  }
  return out;
}

}  // namespace symlie
