#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgrdst/asymptotics.hpp"
#include "cgrdst/model.hpp"
#include "cgrdst/tree.hpp"

namespace cgrdst {

struct ExperimentConfig {
  SequenceModel model = SequenceModel::iid({0.25, 0.25, 0.25, 0.25});
  std::size_t n = 100000;
  std::size_t replicates = 200;
  std::uint64_t seed = 1;
  std::size_t trace_stride = 1;
  std::size_t threads = 1;  // replicates run independently; >1 enables workers
};

struct TraceRow {
  std::size_t n = 0;
  double ell_norm = 0;  // ell_n / ln n
  double L_norm = 0;    // L_n / ln n
  double D_norm = 0;    // D_n / ln n
};

struct ReplicateRow {
  std::size_t replicate = 0;
  std::size_t ell = 0;
  std::size_t D = 0;
  std::size_t L = 0;
  std::size_t M = 0;
};

struct ExperimentReport {
  std::vector<TraceRow> trace;
  std::vector<ReplicateRow> replicates;
  LimitSummary limits;                 // 1/h_plus, 1/h, 1/h_minus
  double expected_ell = 0;             // ln(n) / h_plus
  double expected_D = 0;               // ln(n) / h
  double expected_L = 0;               // ln(n) / h_minus
  std::string rng_algorithm;
  std::uint64_t base_seed = 0;
};

// One tree grown to n letters, emitting normalized statistics every
// trace_stride steps for n >= 2 (ln 1 would divide by zero).
ExperimentReport run_trace(const ExperimentConfig& config);

// Independent replicate trees (seed = mix(base_seed, replicate index)),
// terminal (ell, D, L, M) per replicate. Deterministic regardless of
// thread count: each replicate owns its RNG and results merge in index
// order.
ExperimentReport run_histogram(const ExperimentConfig& config);

// CSV bodies (header row included).
std::string trace_csv(const ExperimentReport& report);
std::string histogram_csv(const ExperimentReport& report);
// Binned counts, bin width 1: "depth,ell_count,D_count,L_count,M_count".
std::string histogram_bins_csv(const ExperimentReport& report);

// Regression on the hand-checked reference example GAGCACAGTGGAAGGG.
struct RegressionResult {
  bool pass = false;
  std::vector<std::string> failures;
};
RegressionResult worked_example_regression();

// Flat key-value experiment config (model keys plus n, replicates,
// seed, trace_stride, threads).
ExperimentConfig read_experiment_config(const std::string& path);

}  // namespace cgrdst
