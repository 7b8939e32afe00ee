// cgrdst: build CGR trees from random or FASTA DNA sequences, compute
// branch/depth statistics and their limit constants, evaluate waiting-time
// generating functions, and run the Monte Carlo experiments. All outputs
// are CSV with a header row.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cgrdst/asymptotics.hpp"
#include "cgrdst/experiments.hpp"
#include "cgrdst/fasta.hpp"
#include "cgrdst/genfun.hpp"
#include "cgrdst/geometry.hpp"
#include "cgrdst/model.hpp"
#include "cgrdst/tree.hpp"

namespace {

using namespace cgrdst;

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::string fasta_path;
  std::string model_kind = "iid";
  std::vector<double> probs = {0.25, 0.25, 0.25, 0.25};
  std::vector<double> q_entries;
  std::uint64_t seed = 1;
  std::size_t n = 1000;
  std::size_t replicates = 200;
  std::size_t stride = 1;
  std::size_t threads = 1;
  std::string word;
  double t = 0.5;
  bool bound_check = false;
};

void add_model_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "flat key-value config file");
  cmd->add_option("--model", o.model_kind, "iid|markov")->check(CLI::IsMember({"iid", "markov"}));
  cmd->add_option("--probs", o.probs, "4 letter probabilities a,c,g,t")->delimiter(',');
  cmd->add_option("--q", o.q_entries, "16 transition probabilities, row-major")->delimiter(',');
  cmd->add_option("--seed", o.seed, "base RNG seed");
}

SequenceModel make_model(const CommonOpts& o) {
  if (!o.config_path.empty()) return read_model_config(o.config_path).model;
  if (o.model_kind == "iid") {
    if (o.probs.size() != 4) throw CLI::ValidationError("--probs needs 4 values");
    return SequenceModel::iid({o.probs[0], o.probs[1], o.probs[2], o.probs[3]});
  }
  if (o.q_entries.size() != 16) throw CLI::ValidationError("--q needs 16 values");
  Matrix4 q;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) q[u][v] = o.q_entries[4 * u + v];
  return SequenceModel::markov(q);
}

Letters make_sequence(const CommonOpts& o) {
  if (!o.fasta_path.empty()) {
    auto records = read_fasta(o.fasta_path);
    Letters all;
    for (const auto& rec : records)
      all.insert(all.end(), rec.sequence.letters.begin(), rec.sequence.letters.end());
    return all;
  }
  return generate(make_model(o), o.n, o.seed).letters;
}

ExperimentConfig make_experiment_config(const CommonOpts& o) {
  if (!o.config_path.empty()) return read_experiment_config(o.config_path);
  ExperimentConfig cfg;
  cfg.model = make_model(o);
  cfg.n = o.n;
  cfg.replicates = o.replicates;
  cfg.seed = o.seed;
  cfg.trace_stride = o.stride;
  cfg.threads = o.threads;
  return cfg;
}

void emit(const CommonOpts& o, const std::string& filename, const std::string& content) {
  if (o.out_dir.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::create_directories(o.out_dir);
  std::ofstream out(std::filesystem::path(o.out_dir) / filename, std::ios::binary);
  if (!out) throw IoError("cannot write " + filename + " under " + o.out_dir);
  out << content;
}

std::string stats_csv(const CgrTree& tree) {
  // One row per insertion: n,shortest,longest,depth_n recomputed as the
  // tree grew.
  CgrTree replay;
  std::string out = "n,shortest,longest,depth_n\n";
  for (auto u : tree.history()) {
    auto rec = replay.insert_letter(u);
    out += std::to_string(rec.n) + ',' + std::to_string(replay.shortest()) + ',' +
           std::to_string(replay.longest()) + ',' + std::to_string(rec.depth) + '\n';
  }
  return out;
}

std::string genfun_csv(const SequenceModel& model, const std::string& word, double t) {
  WordAnalysis analysis(model, letters_from_string(word));
  auto root = denominator_root(analysis);
  char buf[256];
  std::string out = "word,t,phi,gamma_r,delta_r,z_gf,root\n";
  std::snprintf(buf, sizeof buf, "%s,%.12g,%.12g,%.12g,%.12g,%.12g,", word.c_str(), t,
                phi(analysis, t), gamma_r(analysis, t), delta_r(analysis, t),
                genfun_Z(analysis, t));
  out += buf;
  if (root.found) {
    std::snprintf(buf, sizeof buf, "%.12g", root.t);
    out += buf;
  } else {
    out += "inf";
  }
  out += '\n';
  return out;
}

std::string bound_report_csv(const SequenceModel& model, const std::string& word) {
  WordAnalysis analysis(model, letters_from_string(word));
  double gamma = model.gamma();
  std::vector<double> grid;
  double t_lim = gamma > 1e-12 ? 0.9 / gamma : 10.0;
  for (int i = 0; i <= 100; ++i) grid.push_back(-t_lim + 2 * t_lim * i / 100.0);
  auto report = gamma_bound_check(analysis, grid);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s,%.12g,%.12g,%zu,%.12g,%s\n", word.c_str(), report.K,
                report.kappa_prime, report.truncation, report.max_slack,
                report.holds ? "pass" : "fail");
  return std::string("word,K,kappa_prime,truncation,max_slack,status\n") + buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CGR-tree statistics and waiting-time generating functions"};
  app.require_subcommand(1);
  CommonOpts o;

  auto* cmd_generate = app.add_subcommand("generate", "generate a random sequence");
  add_model_flags(cmd_generate, o);
  cmd_generate->add_option("--n", o.n, "sequence length");
  cmd_generate->add_option("--out", o.out_dir, "output directory");

  auto* cmd_constants = app.add_subcommand("constants", "limit constants h+, h, h-");
  add_model_flags(cmd_constants, o);
  cmd_constants->add_option("--out", o.out_dir, "output directory");

  auto* cmd_build = app.add_subcommand("build", "build a tree and dump its nodes");
  add_model_flags(cmd_build, o);
  cmd_build->add_option("--n", o.n, "sequence length");
  cmd_build->add_option("--fasta", o.fasta_path, "read letters from a FASTA file");
  cmd_build->add_option("--out", o.out_dir, "output directory");

  auto* cmd_stats = app.add_subcommand("stats", "per-insertion statistics snapshot");
  add_model_flags(cmd_stats, o);
  cmd_stats->add_option("--n", o.n, "sequence length");
  cmd_stats->add_option("--fasta", o.fasta_path, "read letters from a FASTA file");
  cmd_stats->add_option("--out", o.out_dir, "output directory");

  auto* cmd_points = app.add_subcommand("cgr-points", "CGR trajectory points");
  add_model_flags(cmd_points, o);
  cmd_points->add_option("--n", o.n, "sequence length");
  cmd_points->add_option("--fasta", o.fasta_path, "read letters from a FASTA file");
  cmd_points->add_option("--out", o.out_dir, "output directory");

  auto* cmd_historyless = app.add_subcommand("historyless", "historyless tree representation");
  add_model_flags(cmd_historyless, o);
  cmd_historyless->add_option("--n", o.n, "sequence length");
  cmd_historyless->add_option("--fasta", o.fasta_path, "read letters from a FASTA file");
  cmd_historyless->add_option("--out", o.out_dir, "output directory");

  auto* cmd_genfun = app.add_subcommand("genfun", "waiting-time generating functions");
  add_model_flags(cmd_genfun, o);
  cmd_genfun->add_option("--word", o.word, "word s_1...s_r")->required();
  cmd_genfun->add_option("--t", o.t, "evaluation point");
  cmd_genfun->add_flag("--bound-check", o.bound_check, "emit the gamma_r bound report");
  cmd_genfun->add_option("--out", o.out_dir, "output directory");

  auto* cmd_trace = app.add_subcommand("trace", "normalized statistics along one tree");
  add_model_flags(cmd_trace, o);
  cmd_trace->add_option("--n", o.n, "sequence length");
  cmd_trace->add_option("--stride", o.stride, "emit every k-th step");
  cmd_trace->add_option("--out", o.out_dir, "output directory");

  auto* cmd_histogram = app.add_subcommand("histogram", "replicate terminal statistics");
  add_model_flags(cmd_histogram, o);
  cmd_histogram->add_option("--n", o.n, "sequence length");
  cmd_histogram->add_option("--replicates", o.replicates, "number of replicates");
  cmd_histogram->add_option("--threads", o.threads, "worker threads");
  cmd_histogram->add_option("--out", o.out_dir, "output directory");

  auto* cmd_regress = app.add_subcommand("regress", "worked-example regression");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_generate->parsed()) {
      auto letters = generate(make_model(o), o.n, o.seed).letters;
      std::string out = ">generated seed=" + std::to_string(o.seed) + " algorithm=" +
                        SplitMix64::kAlgorithmName + "\n" + letters_to_string(letters) + "\n";
      emit(o, "sequence.fasta", out);
    } else if (cmd_constants->parsed()) {
      emit(o, "constants.csv", constants_csv(rate_constants(make_model(o))));
    } else if (cmd_build->parsed()) {
      CgrTree tree;
      tree.insert_all(make_sequence(o));
      emit(o, "tree.txt", tree.dump());
    } else if (cmd_stats->parsed()) {
      CgrTree tree;
      tree.insert_all(make_sequence(o));
      emit(o, "stats.csv", stats_csv(tree));
    } else if (cmd_points->parsed()) {
      emit(o, "points.csv", trajectory_csv(cgr_trajectory(make_sequence(o))));
    } else if (cmd_historyless->parsed()) {
      CgrTree tree;
      tree.insert_all(make_sequence(o));
      emit(o, "historyless.csv", historyless_csv(historyless_points(tree)));
    } else if (cmd_genfun->parsed()) {
      auto model = make_model(o);
      if (o.bound_check)
        emit(o, "bound_report.csv", bound_report_csv(model, o.word));
      else
        emit(o, "genfun.csv", genfun_csv(model, o.word, o.t));
    } else if (cmd_trace->parsed()) {
      auto report = run_trace(make_experiment_config(o));
      emit(o, "trace.csv", trace_csv(report));
    } else if (cmd_histogram->parsed()) {
      auto report = run_histogram(make_experiment_config(o));
      emit(o, "histogram.csv", histogram_csv(report));
      if (!o.out_dir.empty()) emit(o, "histogram_bins.csv", histogram_bins_csv(report));
    } else if (cmd_regress->parsed()) {
      auto result = worked_example_regression();
      if (result.pass) {
        std::cout << "worked-example regression: pass\n";
      } else {
        std::cout << "worked-example regression: FAIL\n";
        for (const auto& msg : result.failures) std::cout << "  " << msg << '\n';
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
