#include "cgrdst/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "cgrdst/geometry.hpp"

namespace cgrdst {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out += buf;
}

void fill_limits(const ExperimentConfig& config, ExperimentReport& report) {
  report.limits = limit_summary(config.model);
  double ln_n = std::log(static_cast<double>(config.n));
  report.expected_ell = ln_n * report.limits.inv_h_plus;
  report.expected_D = ln_n * report.limits.inv_h;
  report.expected_L = ln_n * report.limits.inv_h_minus;
  report.rng_algorithm = SplitMix64::kAlgorithmName;
  report.base_seed = config.seed;
}

}  // namespace

ExperimentReport run_trace(const ExperimentConfig& config) {
  if (config.n < 1 || config.trace_stride < 1)
    throw std::invalid_argument("trace needs n >= 1 and trace_stride >= 1");
  ExperimentReport report;
  fill_limits(config, report);

  Sequence seq = generate(config.model, config.n, config.seed);
  CgrTree tree;
  for (std::size_t n = 1; n <= config.n; ++n) {
    auto rec = tree.insert_letter(seq.letters[n - 1]);
    // ln 1 = 0: traces start at n = 2. The terminal step is always emitted.
    if (n < 2) continue;
    if ((n - 2) % config.trace_stride != 0 && n != config.n) continue;
    double ln_n = std::log(static_cast<double>(n));
    report.trace.push_back({n, tree.shortest() / ln_n, tree.longest() / ln_n,
                            rec.depth / ln_n});
  }
  return report;
}

ExperimentReport run_histogram(const ExperimentConfig& config) {
  if (config.replicates < 1) throw std::invalid_argument("histogram needs replicates >= 1");
  ExperimentReport report;
  fill_limits(config, report);
  report.replicates.resize(config.replicates);

  auto run_one = [&](std::size_t r) {
    Sequence seq = generate(config.model, config.n, mix_seed(config.seed, r));
    CgrTree tree;
    std::size_t last_depth = 0;
    for (auto u : seq.letters) last_depth = tree.insert_letter(u).depth;
    std::size_t m = tree.random_path_length(mix_seed(~config.seed, r));
    report.replicates[r] = {r, tree.shortest(), last_depth, tree.longest(), m};
  };

  std::size_t workers = std::max<std::size_t>(1, config.threads);
  if (workers == 1) {
    for (std::size_t r = 0; r < config.replicates; ++r) run_one(r);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < config.replicates; r += workers) run_one(r);
      });
    for (auto& th : pool) th.join();
  }
  return report;
}

std::string trace_csv(const ExperimentReport& report) {
  std::string out = "n,ell_norm,L_norm,D_norm\n";
  for (const auto& row : report.trace) {
    out += std::to_string(row.n);
    out += ',';
    append_double(out, row.ell_norm);
    out += ',';
    append_double(out, row.L_norm);
    out += ',';
    append_double(out, row.D_norm);
    out += '\n';
  }
  return out;
}

std::string histogram_csv(const ExperimentReport& report) {
  std::string out = "replicate,ell,D,L,M\n";
  for (const auto& row : report.replicates) {
    std::ostringstream line;
    line << row.replicate << ',' << row.ell << ',' << row.D << ',' << row.L << ',' << row.M
         << '\n';
    out += line.str();
  }
  return out;
}

std::string histogram_bins_csv(const ExperimentReport& report) {
  std::size_t max_depth = 0;
  for (const auto& row : report.replicates)
    max_depth = std::max({max_depth, row.ell, row.D, row.L, row.M});
  std::vector<std::array<std::size_t, 4>> bins(max_depth + 1, {0, 0, 0, 0});
  for (const auto& row : report.replicates) {
    ++bins[row.ell][0];
    ++bins[row.D][1];
    ++bins[row.L][2];
    ++bins[row.M][3];
  }
  std::string out = "depth,ell_count,D_count,L_count,M_count\n";
  for (std::size_t d = 0; d <= max_depth; ++d) {
    std::ostringstream line;
    line << d << ',' << bins[d][0] << ',' << bins[d][1] << ',' << bins[d][2] << ','
         << bins[d][3] << '\n';
    out += line.str();
  }
  return out;
}

RegressionResult worked_example_regression() {
  RegressionResult result;
  auto fail = [&](const std::string& msg) { result.failures.push_back(msg); };

  const Letters seq = letters_from_string("GAGCACAGTGGAAGGG");
  const Pattern s = Pattern::periodic("ACA", "A");

  // T_k for the branch with s^(3) = ACA.
  auto times = first_tree_sizes(s, seq, 3);
  const std::size_t expected_T[3] = {2, 5, 7};
  for (std::size_t k = 1; k <= 3; ++k) {
    if (!times[k - 1])
      fail("T_" + std::to_string(k) + " not reached");
    else if (*times[k - 1] != expected_T[k - 1])
      fail("T_" + std::to_string(k) + " = " + std::to_string(*times[k - 1]) + ", expected " +
           std::to_string(expected_T[k - 1]));
  }

  // X_n steps: X_0 = X_1 = 0, X_2 = X_3 = X_4 = 1, X_5 = X_6 = 2, X_7.. = 3.
  const std::size_t expected_X[17] = {0, 0, 1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3};
  CgrTree tree;
  if (tree.branch_length(s) != 0) fail("X_0 != 0");
  for (std::size_t n = 1; n <= 16; ++n) {
    tree.insert_letter(seq[n - 1]);
    std::size_t x = tree.branch_length(s);
    if (x != expected_X[n])
      fail("X_" + std::to_string(n) + " = " + std::to_string(x) + ", expected " +
           std::to_string(expected_X[n]));
  }

  // The 16-node historyless point set has 16 distinct points.
  auto points = historyless_points(tree);
  if (points.size() != 16) fail("historyless point count != 16");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].second.x == points[j].second.x && points[i].second.y == points[j].second.y)
        fail("historyless points " + std::to_string(i) + " and " + std::to_string(j) +
             " coincide");

  result.pass = result.failures.empty();
  return result;
}

ExperimentConfig read_experiment_config(const std::string& path) {
  auto kv = read_flat_config(path);
  ExperimentConfig cfg;
  cfg.model = model_from_config(kv);
  if (kv.count("seed")) cfg.seed = std::stoull(kv.at("seed"));
  if (kv.count("n")) cfg.n = std::stoull(kv.at("n"));
  if (kv.count("replicates")) cfg.replicates = std::stoull(kv.at("replicates"));
  if (kv.count("trace_stride")) cfg.trace_stride = std::stoull(kv.at("trace_stride"));
  if (kv.count("threads")) cfg.threads = std::stoull(kv.at("threads"));
  if (cfg.n < 1 || cfg.replicates < 1 || cfg.trace_stride < 1)
    throw std::runtime_error("experiment config needs n, replicates, trace_stride >= 1");
  return cfg;
}

}  // namespace cgrdst
