// Serial reference vs OpenMP kernels on Cora-sized inputs (2708 nodes).
// Thread count follows OMP_NUM_THREADS.

#include <random>

#include <benchmark/benchmark.h>

#include "ns4gc/graph.hpp"
#include "ns4gc/kernels.hpp"

using namespace ns4gc;

namespace {

constexpr Index kNodes = 2708;

DenseMatrix random_matrix(Index rows, Index cols, std::uint64_t seed, bool unit = false) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  DenseMatrix m(rows, cols);
  for (double& v : m.values()) v = d(rng);
  if (unit)
    for (Index i = 0; i < rows; ++i) {
      double s = 0.0;
      for (double v : m.row(i)) s += v * v;
      for (double& v : m.row(i)) v /= std::sqrt(s);
    }
  return m;
}

// Binary bag-of-words style rows, about 1.3% dense like Cora.
DenseMatrix sparse_features(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution on(0.013);
  DenseMatrix m(rows, cols);
  for (double& v : m.values()) v = on(rng) ? 1.0 : 0.0;
  return m;
}

const CsrMatrix& adjacency() {
  static const CsrMatrix a = [] {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<NodeId> pick(0, kNodes - 1);
    std::vector<Edge> edges;
    while (edges.size() < 5278) {
      NodeId i = pick(rng), j = pick(rng);
      if (i != j) edges.emplace_back(i, j);
    }
    return adjacency_from_edges(kNodes, edges);
  }();
  return a;
}

template <auto F>
void bm_features(benchmark::State& st) {
  const DenseMatrix x = sparse_features(kNodes, 1433, 1);
  const DenseMatrix w = random_matrix(1433, 256, 2);
  for (auto _ : st) benchmark::DoNotOptimize(F(x, w));
}

template <auto F>
void bm_dense(benchmark::State& st) {
  const DenseMatrix a = random_matrix(kNodes, 256, 4);
  const DenseMatrix b = random_matrix(256, 64, 5);
  for (auto _ : st) benchmark::DoNotOptimize(F(a, b));
}

template <auto F>
void bm_spmm(benchmark::State& st) {
  const CsrMatrix a = normalize_adjacency(adjacency()).matrix;
  const DenseMatrix h = random_matrix(kNodes, 256, 6);
  for (auto _ : st) benchmark::DoNotOptimize(F(a, h));
}

void bm_sparsity_serial(benchmark::State& st) {
  const DenseMatrix z1 = random_matrix(kNodes, 64, 7, true), z2 = random_matrix(kNodes, 64, 8, true);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::serial::sparsity_sum(z1, z2, adjacency(), 0.6, 0.1, st.range(0) != 0));
}

void bm_sparsity_omp(benchmark::State& st) {
  const DenseMatrix z1 = random_matrix(kNodes, 64, 7, true), z2 = random_matrix(kNodes, 64, 8, true);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::sparsity_sum(z1, z2, adjacency(), 0.6, 0.1, 2048, st.range(0) != 0));
}

void bm_assign_serial(benchmark::State& st) {
  const DenseMatrix pts = random_matrix(kNodes, 64, 9), centers = random_matrix(7, 64, 10);
  std::vector<NodeId> assignment;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::assign_nearest(pts, centers, assignment));
}

void bm_assign_omp(benchmark::State& st) {
  const DenseMatrix pts = random_matrix(kNodes, 64, 9), centers = random_matrix(7, 64, 10);
  std::vector<NodeId> assignment;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::assign_nearest(pts, centers, assignment));
}

}  // namespace

BENCHMARK(bm_features<kernels::serial::matmul>)->Name("matmul_features/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_features<kernels::matmul>)->Name("matmul_features/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_dense<kernels::serial::matmul>)->Name("matmul_dense/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_dense<kernels::matmul>)->Name("matmul_dense/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_spmm<kernels::serial::spmm>)->Name("spmm/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_spmm<kernels::spmm>)->Name("spmm/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sparsity_serial)->Name("sparsity_sum/serial")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sparsity_omp)->Name("sparsity_sum/omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_assign_serial)->Name("assign_nearest/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(bm_assign_omp)->Name("assign_nearest/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
