// symlie: symmetry Lie algebras of homogeneous ideals and a non-toricness test.
//
// Exit codes: 0 success (any verdict), 1 parse error, 2 precondition violation.

#include "symlie/groebner.hpp"
#include "symlie/io.hpp"
#include "symlie/lie.hpp"
#include "symlie/models.hpp"
#include "symlie/parser.hpp"
#include "symlie/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace symlie;

namespace {

void print_matrix(std::ostream& os, const Matrix& m) {
  for (const auto& row : matrix_cells(m)) {
    os << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? ", " : "") << row[c];
    os << "]\n";
  }
}

void print_basis(std::ostream& os, std::span<const Matrix> basis) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    os << "basis matrix " << k + 1 << (basis[k].is_diagonal() ? " (diagonal)" : "") << ":\n";
    print_matrix(os, basis[k]);
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  // Write to a sibling temp file and rename so readers never see a partial report.
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'", 0, 0);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::vector<Polynomial> read_generators_for(const std::string& path) {
  return read_ideal_file(path).generators;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry Lie algebras of homogeneous polynomial ideals"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Lie algebra, dimension and verdict for an ideal file");
  std::string ideal_path;
  int degree = -1;
  bool no_dimension = false;
  bool nonprime = false;
  bool no_timings = false;
  std::string format = "json";
  std::string out_path;
  analyze_cmd->add_option("file", ideal_path, "Ideal file")->required();
  analyze_cmd->add_option("--degree", degree, "Compute the stabilizer of [I]_D");
  analyze_cmd->add_flag("--no-dimension", no_dimension, "Skip the Krull dimension and verdict");
  analyze_cmd->add_flag("--nonprime", nonprime, "Intersect stabilizers over all generator degrees");
  analyze_cmd->add_flag("--no-timings", no_timings, "Emit an empty timings_ms object");
  analyze_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--out", out_path, "Write the report to PATH");

  auto* lie_cmd = app.add_subcommand("lie", "Print the symmetry Lie algebra basis");
  lie_cmd->add_option("file", ideal_path, "Ideal file")->required();
  std::string check_path;
  lie_cmd->add_option("--check", check_path, "Matrix list file; report membership of each matrix");

  auto* dim_cmd = app.add_subcommand("dim", "Print the Krull dimension of R/I");
  dim_cmd->add_option("file", ideal_path, "Ideal file")->required();

  std::string matrix_path;
  auto* conj_cmd = app.add_subcommand("conjugate", "Conjugate the Lie algebra basis: B^-1 A B");
  conj_cmd->add_option("file", ideal_path, "Ideal file")->required();
  conj_cmd->add_option("--matrix", matrix_path, "Matrix file")->required();

  auto* cv_cmd = app.add_subcommand("change-vars", "Substitute x_i -> sum_j B_ij x_j in every generator");
  cv_cmd->add_option("file", ideal_path, "Ideal file")->required();
  cv_cmd->add_option("--matrix", matrix_path, "Matrix file")->required();

  auto* model_cmd = app.add_subcommand("model", "Statistical model constructors");
  model_cmd->require_subcommand(1);
  std::string model_path;
  std::string verify_path;
  bool kernel = false;
  auto* st_cmd = model_cmd->add_subcommand("staged-tree", "Staged tree parametrization");
  st_cmd->add_option("file", model_path, "Staged tree file")->required();
  st_cmd->add_option("--verify", verify_path, "Ideal file whose generators should lie in the kernel");
  st_cmd->add_flag("--kernel", kernel, "Compute the kernel by elimination (small trees only)");
  auto* g_cmd = model_cmd->add_subcommand("gaussian", "Gaussian graphical model cofactor map");
  g_cmd->add_option("file", model_path, "Graph file")->required();
  g_cmd->add_option("--verify", verify_path, "Ideal file whose generators should lie in the kernel");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      IdealSpec ideal = read_ideal_file(ideal_path);
      AnalysisOptions opts;
      if (degree >= 0) opts.degree = degree;
      opts.skip_dimension = no_dimension;
      opts.nonprime = nonprime;
      opts.record_timings = !no_timings;
      AnalysisReport report = analyze(ideal, opts);
      write_output(emit_report(report, format == "json" ? ReportFormat::kJson : ReportFormat::kText), out_path);
    } else if (lie_cmd->parsed()) {
      IdealSpec ideal = read_ideal_file(ideal_path);
      LieAlgebraBasis algebra = symmetry_lie_algebra(ideal);
      std::cout << "degree used: " << algebra.degree_used << "\n"
                << "graded rank: " << algebra.graded_rank << "\n"
                << "dimension: " << algebra.dimension() << "\n";
      print_basis(std::cout, algebra.basis);
      if (!check_path.empty()) {
        std::vector<Matrix> known = read_matrix_list_file(check_path);
        for (std::size_t k = 0; k < known.size(); ++k) {
          if (known[k].rows() != algebra.n) throw PreconditionError("matrix size does not match the ring");
          std::cout << "check matrix " << k + 1 << ": " << (membership(algebra, known[k]) ? "member" : "NOT a member")
                    << "\n";
        }
      }
    } else if (dim_cmd->parsed()) {
      IdealSpec ideal = read_ideal_file(ideal_path);
      std::cout << "affine cone dimension: " << krull_dimension(ideal) << "\n";
    } else if (conj_cmd->parsed()) {
      IdealSpec ideal = read_ideal_file(ideal_path);
      Matrix b = read_matrix_file(matrix_path);
      if (b.rows() != ideal.ring->arity()) throw PreconditionError("matrix size does not match the ring");
      LieAlgebraBasis algebra = symmetry_lie_algebra(ideal);
      std::vector<Matrix> conj = conjugate_basis(algebra.basis, b);
      std::cout << "dimension: " << conj.size() << "\n";
      print_basis(std::cout, conj);
      std::cout << "diagonal subalgebra dimension: " << diagonal_subalgebra_dim(conj) << "\n";
    } else if (cv_cmd->parsed()) {
      IdealSpec ideal = read_ideal_file(ideal_path);
      Matrix b = read_matrix_file(matrix_path);
      IdealSpec moved = ideal;
      for (auto& g : moved.generators) g = change_variables(g, b);
      std::cout << format_ideal(moved);
      std::cout << "# binomial generators: " << (is_binomial_set(moved.generators) ? "yes" : "no") << "\n";
    } else if (st_cmd->parsed()) {
      StagedTree tree = parse_staged_tree(read_text_file(model_path));
      StagedParametrization par = staged_tree_parametrization(tree);
      std::vector<std::string> leaves = tree.leaves();
      for (std::size_t r = 0; r < par.images.size(); ++r)
        std::cout << "x" << r + 1 << " (" << leaves[r] << ") -> " << par.images[r].to_string() << "\n";
      for (const auto& rel : par.stage_relations()) std::cout << "relation: " << rel.to_string() << " = 0\n";
      if (!verify_path.empty()) {
        auto gens = read_generators_for(verify_path);
        auto ok = verify_staged_kernel(tree, gens);
        for (std::size_t k = 0; k < gens.size(); ++k)
          std::cout << "verify generator " << k + 1 << ": " << (ok[k] ? "in kernel" : "NOT in kernel") << "\n";
      }
      if (kernel) {
        IdealSpec ker = staged_tree_kernel(tree);
        std::cout << "kernel generators: " << ker.generators.size() << "\n";
        for (const auto& g : ker.generators) std::cout << "  " << g.to_string() << "\n";
      }
    } else if (g_cmd->parsed()) {
      ColoredGraph graph = parse_graph(read_text_file(model_path));
      GaussianCofactorMap map = gaussian_cofactor_map(graph);
      std::cout << "det K = " << map.determinant.to_string() << "\n";
      std::size_t n = graph.vertices;
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= j; ++i)
          std::cout << map.sigma->name(sigma_index(i, j)) << " -> " << map.adjugate[i - 1][j - 1].to_string() << "\n";
      if (!verify_path.empty()) {
        auto gens = read_generators_for(verify_path);
        auto ok = verify_gaussian_kernel(graph, gens);
        for (std::size_t k = 0; k < gens.size(); ++k)
          std::cout << "verify generator " << k + 1 << ": " << (ok[k] ? "in kernel" : "NOT in kernel") << "\n";
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
