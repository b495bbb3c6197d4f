#include "symlie/report.hpp"
#include "symlie/groebner.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symlie {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNotToric:
      return "NOT_TORIC";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
    case Verdict::kSkipped:
      return "SKIPPED";
  }
  return "SKIPPED";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "NOT_TORIC") return Verdict::kNotToric;
  if (s == "INCONCLUSIVE") return Verdict::kInconclusive;
  if (s == "SKIPPED") return Verdict::kSkipped;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

std::vector<std::vector<std::string>> matrix_cells(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(m(r, c).to_string());
  return rows;
}

namespace {

class PhaseTimer {
 public:
  explicit PhaseTimer(AnalysisReport& report, bool enabled) : report_(report), enabled_(enabled) {}

  template <typename F>
  auto run(const std::string& phase, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    if (enabled_) {
      std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      report_.timings_ms.emplace_back(phase, elapsed.count());
    }
    return result;
  }

 private:
  AnalysisReport& report_;
  bool enabled_;
};

}  // namespace

AnalysisReport analyze(const IdealSpec& ideal, const AnalysisOptions& options) {
  for (const auto& g : ideal.generators)
    if (!g.homogeneous_degree()) throw PreconditionError("generator is not homogeneous: " + g.to_string());
  if (ideal.generators.empty()) throw PreconditionError("ideal needs at least one generator");

  AnalysisReport report;
  report.ring = ideal.ring->variables();
  for (const auto& g : ideal.generators) report.generators.push_back(g.to_string());
  report.asserted_prime = ideal.asserted_prime;
  PhaseTimer timer(report, options.record_timings);

  LieAlgebraBasis algebra = timer.run("lie_algebra", [&] {
    StabilizerOptions so;
    so.mode = options.mode;
    if (options.nonprime || !ideal.asserted_prime) {
      std::set<int> degs;
      for (const auto& g : ideal.generators) degs.insert(g.degree());
      std::vector<int> list(degs.begin(), degs.end());
      return symmetry_lie_algebra_multidegree(ideal, list, options.mode);
    }
    if (options.degree) {
      so.graded_only = *options.degree < ideal.max_degree();
      return symmetry_lie_algebra_at_degree(ideal, *options.degree, so);
    }
    return symmetry_lie_algebra(ideal, so);
  });
  report.degree_used = algebra.degree_used;
  report.graded_rank = algebra.graded_rank;
  report.graded_only = algebra.graded_only;
  report.lie_dimension = algebra.dimension();
  for (const auto& m : algebra.basis) report.lie_basis.push_back(matrix_cells(m));

  std::tie(report.bracket_closed, report.diagonal_subalgebra_dimension) = timer.run("diagnostics", [&] {
    return std::make_pair(bracket_closure_check(algebra), diagonal_subalgebra_dim(algebra.basis));
  });

  if (options.skip_dimension) {
    report.verdict = Verdict::kSkipped;
  } else {
    report.ideal_dimension = timer.run("dimension", [&] { return krull_dimension(ideal); });
    report.verdict = static_cast<int>(report.lie_dimension) < *report.ideal_dimension ? Verdict::kNotToric
                                                                                       : Verdict::kInconclusive;
  }
  return report;
}

std::string verdict_line(const AnalysisReport& r) {
  std::string g = std::to_string(r.lie_dimension);
  switch (r.verdict) {
    case Verdict::kNotToric:
      return "VERDICT: NOT TORIC (dim g = " + g + " < dim I = " + std::to_string(*r.ideal_dimension) + ")";
    case Verdict::kInconclusive:
      return "VERDICT: INCONCLUSIVE (dim g = " + g + " >= dim I = " + std::to_string(*r.ideal_dimension) + ")";
    case Verdict::kSkipped:
      return "VERDICT: SKIPPED (ideal dimension not computed)";
  }
  return {};
}

namespace {

ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["ring"] = r.ring;
  j["generators"] = r.generators;
  j["degree_used"] = r.degree_used;
  j["graded_rank"] = r.graded_rank;
  j["lie_dimension"] = r.lie_dimension;
  j["lie_basis"] = r.lie_basis;
  j["ideal_dimension"] = r.ideal_dimension ? ordered_json(*r.ideal_dimension) : ordered_json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["diagonal_subalgebra_dimension"] = r.diagonal_subalgebra_dimension;
  j["bracket_closed"] = r.bracket_closed;
  j["asserted_prime"] = r.asserted_prime;
  j["graded_only"] = r.graded_only;
  ordered_json t = ordered_json::object();
  for (const auto& [phase, ms] : r.timings_ms) t[phase] = ms;
  j["timings_ms"] = t;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string text_report(const AnalysisReport& r) {
  std::ostringstream os;
  os << "ring: ";
  for (std::size_t i = 0; i < r.ring.size(); ++i) os << (i ? ", " : "") << r.ring[i];
  os << "\ngenerators:\n";
  for (const auto& g : r.generators) os << "  " << g << "\n";
  os << "degree used: " << r.degree_used << (r.graded_only ? " (graded stabilizer only)" : "") << "\n";
  os << "graded rank: " << r.graded_rank << "\n";
  os << "asserted prime: " << yes_no(r.asserted_prime) << "\n";
  os << "symmetry Lie algebra dimension: " << r.lie_dimension << "\n";
  for (std::size_t k = 0; k < r.lie_basis.size(); ++k) {
    os << "basis matrix " << k + 1 << ":\n";
    for (const auto& row : r.lie_basis[k]) {
      os << "  [";
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? ", " : "") << row[c];
      os << "]\n";
    }
  }
  os << "bracket closed: " << yes_no(r.bracket_closed) << "\n";
  os << "diagonal subalgebra dimension: " << r.diagonal_subalgebra_dimension << "\n";
  if (r.ideal_dimension) os << "affine cone dimension: " << *r.ideal_dimension << "\n";
  for (const auto& [phase, ms] : r.timings_ms) os << "time " << phase << ": " << ms << " ms\n";
  os << verdict_line(r) << "\n";
  return os.str();
}

}  // namespace

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return to_json(report).dump(2) + "\n";
  return text_report(report);
}

AnalysisReport report_from_json(std::string_view json) {
  ordered_json j = ordered_json::parse(json);
  AnalysisReport r;
  r.ring = j.at("ring").get<std::vector<std::string>>();
  r.generators = j.at("generators").get<std::vector<std::string>>();
  r.degree_used = j.at("degree_used").get<int>();
  r.graded_rank = j.at("graded_rank").get<std::size_t>();
  r.lie_dimension = j.at("lie_dimension").get<std::size_t>();
  r.lie_basis = j.at("lie_basis").get<std::vector<std::vector<std::vector<std::string>>>>();
  if (!j.at("ideal_dimension").is_null()) r.ideal_dimension = j.at("ideal_dimension").get<int>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.diagonal_subalgebra_dimension = j.at("diagonal_subalgebra_dimension").get<std::size_t>();
  r.bracket_closed = j.at("bracket_closed").get<bool>();
  r.asserted_prime = j.at("asserted_prime").get<bool>();
  r.graded_only = j.at("graded_only").get<bool>();
  for (const auto& [phase, ms] : j.at("timings_ms").items()) r.timings_ms.emplace_back(phase, ms.get<double>());
  return r;
}

}  // namespace symlie
