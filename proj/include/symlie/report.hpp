#pragma once

#include "symlie/graded.hpp"
#include "symlie/lie.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symlie {

// The dimension test is one-directional: a large algebra never proves
// toricness, so there is no TORIC verdict.
enum class Verdict { kNotToric, kInconclusive, kSkipped };

std::string to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct AnalysisOptions {
  // Degree for the graded stabilizer; default is the largest generator degree.
  std::optional<int> degree;
  bool skip_dimension = false;
  // Intersect the stabilizers of every generator degree.
  bool nonprime = false;
  // When false, timings_ms is emitted empty so output is byte-reproducible.
  bool record_timings = true;
  KernelMode mode = KernelMode::kParallel;
};

struct AnalysisReport {
  std::vector<std::string> ring;
  std::vector<std::string> generators;
  int degree_used = 0;
  std::size_t graded_rank = 0;
  std::size_t lie_dimension = 0;
  // Each matrix as rows of scalar strings.
  std::vector<std::vector<std::vector<std::string>>> lie_basis;
  // Krull dimension of R/I (affine cone); empty when skipped.
  std::optional<int> ideal_dimension;
  Verdict verdict = Verdict::kSkipped;
  std::size_t diagonal_subalgebra_dimension = 0;
  bool bracket_closed = false;
  bool asserted_prime = true;
  bool graded_only = false;
  std::vector<std::pair<std::string, double>> timings_ms;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Throws PreconditionError for inhomogeneous generators or the unit ideal.
AnalysisReport analyze(const IdealSpec& ideal, const AnalysisOptions& options = {});

enum class ReportFormat { kJson, kText };

std::string emit_report(const AnalysisReport& report, ReportFormat format);
AnalysisReport report_from_json(std::string_view json);

// "VERDICT: NOT TORIC (dim g = 4 < dim I = 5)" and friends.
std::string verdict_line(const AnalysisReport& report);

std::vector<std::vector<std::string>> matrix_cells(const Matrix& m);

}  // namespace symlie
