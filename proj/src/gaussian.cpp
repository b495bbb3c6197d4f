#include "symlie/models.hpp"
#include "symlie/parser.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace symlie {

namespace {

std::pair<std::size_t, std::size_t> parse_edge(const std::string& tok, std::size_t n, std::size_t line) {
  auto dash = tok.find('-');
  if (dash == std::string::npos) throw ParseError("expected edge 'i-j', got '" + tok + "'", line, 1);
  std::size_t a = 0;
  std::size_t b = 0;
  try {
    a = std::stoul(tok.substr(0, dash));
    b = std::stoul(tok.substr(dash + 1));
  } catch (const std::exception&) {
    throw ParseError("expected edge 'i-j', got '" + tok + "'", line, 1);
  }
  if (a == b || a < 1 || b < 1 || a > n || b > n) throw ParseError("invalid edge '" + tok + "'", line, 1);
  return {std::min(a, b), std::max(a, b)};
}

std::vector<std::string> split_items(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  ColoredGraph g;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_vertices = false;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto colon = raw.find(':');
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, 1);
    std::string key = raw.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::vector<std::string> items = split_items(raw.substr(colon + 1));
    if (key == "vertices") {
      if (items.size() != 1) throw ParseError("expected 'vertices: <n>'", line_no, 1);
      try {
        g.vertices = std::stoul(items[0]);
      } catch (const std::exception&) {
        throw ParseError("vertex count is not a number", line_no, colon + 2);
      }
      if (g.vertices == 0) throw ParseError("graph needs at least one vertex", line_no, colon + 2);
      have_vertices = true;
    } else if (!have_vertices) {
      throw ParseError("'vertices:' must come first", line_no, 1);
    } else if (key == "edges") {
      for (const auto& it : items) {
        auto e = parse_edge(it, g.vertices, line_no);
        if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) g.edges.push_back(e);
      }
    } else if (key == "vertex_colors") {
      for (const auto& it : items) {
        auto c = it.find(':');
        if (c == std::string::npos) throw ParseError("expected 'v:color'", line_no, 1);
        std::size_t v = 0;
        try {
          v = std::stoul(it.substr(0, c));
        } catch (const std::exception&) {
          throw ParseError("expected 'v:color'", line_no, 1);
        }
        if (v < 1 || v > g.vertices) throw ParseError("vertex out of range in '" + it + "'", line_no, 1);
        g.vertex_colors[v] = it.substr(c + 1);
      }
    } else if (key == "edge_colors") {
      for (const auto& it : items) {
        auto c = it.find(':');
        if (c == std::string::npos) throw ParseError("expected 'i-j:color'", line_no, 1);
        auto e = parse_edge(it.substr(0, c), g.vertices, line_no);
        if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end())
          throw ParseError("colored edge '" + it.substr(0, c) + "' is not in the edge list", line_no, 1);
        g.edge_colors[e] = it.substr(c + 1);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
  }
  if (!have_vertices) throw ParseError("missing 'vertices:'", line_no, 1);
  return g;
}

RingPtr sigma_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= j; ++i) names.push_back("s" + std::to_string(i) + std::to_string(j));
  return make_ring(names);
}

std::size_t sigma_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (j - 1) * j / 2 + (i - 1);
}

Polynomial polynomial_determinant(const PolyMatrix& m, const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, Scalar(1));
  // Laplace expansion along rows in order, memoized on the used columns.
  std::unordered_map<unsigned, Polynomial> memo;
  std::function<Polynomial(std::size_t, unsigned)> det = [&](std::size_t row, unsigned used) -> Polynomial {
    if (row == n) return Polynomial::constant(ring, Scalar(1));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1U << c)) continue;
      if (!m[row][c].is_zero()) {
        Polynomial term = m[row][c] * det(row + 1, used | (1U << c));
        if (sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return det(0, 0);
}

GaussianCofactorMap gaussian_cofactor_map(const ColoredGraph& graph, std::size_t max_vertices) {
  std::size_t n = graph.vertices;
  if (n > max_vertices)
    throw PreconditionError("graph has " + std::to_string(n) + " vertices; cofactor expansion is limited to " +
                            std::to_string(max_vertices));
  // Class key for every nonzero position (i <= j, 1-based).
  auto key_of = [&](std::size_t i, std::size_t j) -> std::string {
    if (i == j) {
      auto it = graph.vertex_colors.find(i);
      return it == graph.vertex_colors.end() ? "v" + std::to_string(i) : "vc:" + it->second;
    }
    auto it = graph.edge_colors.find({i, j});
    return it == graph.edge_colors.end() ? "e" + std::to_string(i) + "-" + std::to_string(j) : "ec:" + it->second;
  };
  auto present = [&](std::size_t i, std::size_t j) {
    return i == j || std::find(graph.edges.begin(), graph.edges.end(), std::make_pair(i, j)) != graph.edges.end();
  };
  std::map<std::string, std::size_t> class_var;
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= j; ++i) {
      if (!present(i, j)) continue;
      std::string key = key_of(i, j);
      if (!class_var.count(key)) {
        class_var[key] = names.size();
        names.push_back("k" + std::to_string(i) + std::to_string(j));
      }
    }
  GaussianCofactorMap out;
  out.k_ring = make_ring(names);
  out.sigma = sigma_ring(n);
  out.concentration.assign(n, std::vector<Polynomial>(n, Polynomial(out.k_ring)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      if (!present(i, j)) continue;
      Polynomial v = Polynomial::variable(out.k_ring, class_var.at(key_of(i, j)));
      out.concentration[i - 1][j - 1] = v;
      out.concentration[j - 1][i - 1] = v;
    }
  out.determinant = polynomial_determinant(out.concentration, out.k_ring);
  out.adjugate.assign(n, std::vector<Polynomial>(n, Polynomial(out.k_ring)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      PolyMatrix minor;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == r) continue;
        std::vector<Polynomial> row;
        for (std::size_t b = 0; b < n; ++b)
          if (b != c) row.push_back(out.concentration[a][b]);
        minor.push_back(std::move(row));
      }
      Polynomial cof = polynomial_determinant(minor, out.k_ring);
      if ((r + c) % 2 == 1) cof = -cof;
      out.adjugate[c][r] = std::move(cof);
    }
  return out;
}

std::vector<bool> verify_gaussian_kernel(const ColoredGraph& graph, std::span<const Polynomial> generators) {
  GaussianCofactorMap map = gaussian_cofactor_map(graph);
  std::size_t n = graph.vertices;
  std::vector<Polynomial> images(n * (n + 1) / 2, Polynomial(map.k_ring));
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= j; ++i) images[sigma_index(i, j)] = map.adjugate[i - 1][j - 1];
  std::vector<bool> out;
  for (const auto& g : generators) {
    if (g.ring()->arity() != images.size())
      throw std::invalid_argument("verify_gaussian_kernel: generator ring must have " + std::to_string(images.size()) +
                                  " variables");
    if (!g.homogeneous_degree())
      throw PreconditionError("verify_gaussian_kernel: generator is not homogeneous: " + g.to_string());
    out.push_back(substitute(g, images, map.k_ring).is_zero());
  }
  return out;
}

}  // namespace symlie
