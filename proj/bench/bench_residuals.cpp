// Serial vs OpenMP construction of the stabilizer residual table, and the
// full Lie algebra computation in both modes.
#include "symlie/io.hpp"
#include "symlie/lie.hpp"
#include "symlie/stabilizer_kernels.hpp"

#include <benchmark/benchmark.h>

#include <filesystem>

using namespace symlie;

namespace {

struct Case {
  const char* file;
  int degree;
};

// Degree above the generator degree makes [I]_d and the table larger.
const Case kCases[] = {
    {"staged_tree_8.ideal", 2}, {"staged_tree_8.ideal", 3}, {"one_stage_9.ideal", 2},
    {"gaussian_4cycle.ideal", 3}, {"gaussian_4cycle.ideal", 4},
};

IdealSpec load(const Case& c) { return read_ideal_file(std::filesystem::path(SYMLIE_DATA_DIR) / c.file); }

template <bool Parallel>
void BM_ResidualTable(benchmark::State& state) {
  const Case& c = kCases[state.range(0)];
  IdealSpec ideal = load(c);
  GradedBasis basis = graded_basis(ideal, c.degree);
  for (auto _ : state) {
    ResidualTable t = Parallel ? residual_table_parallel(basis, ideal.ring) : residual_table_serial(basis, ideal.ring);
    benchmark::DoNotOptimize(t);
  }
  state.SetLabel(std::string(c.file) + " d=" + std::to_string(c.degree) + " k=" + std::to_string(basis.rank()));
}

template <KernelMode Mode>
void BM_LieAlgebra(benchmark::State& state) {
  const Case& c = kCases[state.range(0)];
  IdealSpec ideal = load(c);
  for (auto _ : state) {
    LieAlgebraBasis a = symmetry_lie_algebra_at_degree(ideal, c.degree, {false, Mode});
    benchmark::DoNotOptimize(a);
  }
  state.SetLabel(std::string(c.file) + " d=" + std::to_string(c.degree));
}

void all_cases(benchmark::internal::Benchmark* b) {
  for (long k = 0; k < static_cast<long>(std::size(kCases)); ++k) b->Arg(k);
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_ResidualTable<false>)->Name("residual_table/serial")->Apply(all_cases);
BENCHMARK(BM_ResidualTable<true>)->Name("residual_table/parallel")->Apply(all_cases);
BENCHMARK(BM_LieAlgebra<KernelMode::kSerial>)->Name("lie_algebra/serial")->Apply(all_cases);
BENCHMARK(BM_LieAlgebra<KernelMode::kParallel>)->Name("lie_algebra/parallel")->Apply(all_cases);

BENCHMARK_MAIN();
