#include "cgrdst/model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace cgrdst {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kStationaryTol = 1e-10;
constexpr double kPowerIterTol = 1e-13;
constexpr std::size_t kPowerIterMax = 1000000;

void check_stochastic(const Matrix4& q) {
  for (std::size_t u = 0; u < 4; ++u) {
    double row = 0;
    for (std::size_t v = 0; v < 4; ++v) {
      if (q[u][v] < 0) throw NonStochasticError("negative transition probability");
      row += q[u][v];
    }
    if (std::abs(row - 1.0) > kRowSumTol)
      throw NonStochasticError("row " + std::to_string(u) + " sums to " + std::to_string(row));
  }
}

Eigen::Matrix4d to_eigen(const Matrix4& q) {
  Eigen::Matrix4d m;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) m(u, v) = q[u][v];
  return m;
}

}  // namespace

Vector4 stationary_of(const Matrix4& q) {
  check_stochastic(q);
  Vector4 p{0.25, 0.25, 0.25, 0.25};
  for (std::size_t iter = 0; iter < kPowerIterMax; ++iter) {
    Vector4 next{0, 0, 0, 0};
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = 0; v < 4; ++v) next[v] += p[u] * q[u][v];
    double norm = next[0] + next[1] + next[2] + next[3];
    for (auto& x : next) x /= norm;
    double diff = 0;
    for (std::size_t v = 0; v < 4; ++v) diff = std::max(diff, std::abs(next[v] - p[v]));
    p = next;
    if (diff < kPowerIterTol) return p;
  }
  throw ReducibleError("power iteration did not converge to a unique fixed point");
}

double second_eigenvalue_modulus(const Matrix4& q) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(to_eigen(q), /*computeEigenvectors=*/false);
  std::array<double, 4> mods;
  for (int i = 0; i < 4; ++i) mods[i] = std::abs(solver.eigenvalues()(i));
  std::sort(mods.begin(), mods.end(), std::greater<>());
  return mods[1];
}

SequenceModel::SequenceModel(Kind kind, Matrix4 q, Vector4 p)
    : kind_(kind), q_(q), p_(p), gamma_(second_eigenvalue_modulus(q)) {}

SequenceModel SequenceModel::iid(const Vector4& p) {
  double sum = 0;
  for (double x : p) {
    if (x < 0) throw NonStochasticError("negative letter probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kRowSumTol) throw NonStochasticError("letter probabilities must sum to 1");
  Matrix4 q;
  for (auto& row : q) row = p;
  return SequenceModel(Kind::iid, q, p);
}

SequenceModel SequenceModel::markov(const Matrix4& q) {
  return SequenceModel(Kind::markov, q, stationary_of(q));
}

SequenceModel SequenceModel::markov(const Matrix4& q, const Vector4& p) {
  check_stochastic(q);
  for (std::size_t v = 0; v < 4; ++v) {
    double pv = 0;
    for (std::size_t u = 0; u < 4; ++u) pv += p[u] * q[u][v];
    if (std::abs(pv - p[v]) > kStationaryTol)
      throw NonStochasticError("supplied vector is not Q-invariant");
  }
  return SequenceModel(Kind::markov, q, p);
}

Sequence generate(const SequenceModel& model, std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Sequence out;
  out.letters.reserve(n);
  out.origin = {SequenceOrigin::Kind::generated, seed, "", ""};
  auto draw = [&](const Vector4& dist) {
    double x = rng.next_double();
    double acc = 0;
    for (std::size_t v = 0; v < 3; ++v) {
      acc += dist[v];
      if (x < acc) return kAlphabet[v];
    }
    return Nucleotide::T;
  };
  if (n == 0) return out;
  Nucleotide prev = draw(model.p());
  out.letters.push_back(prev);
  for (std::size_t k = 1; k < n; ++k) {
    prev = draw(model.q()[ordinal(prev)]);
    out.letters.push_back(prev);
  }
  return out;
}

double word_probability(const SequenceModel& model, const Letters& word) {
  if (word.empty()) throw std::invalid_argument("word_probability needs a nonempty word");
  // Right-to-left chain reading: p(s_m) Q(s_m, s_{m-1}) ... Q(s_2, s_1).
  double prob = model.stationary(word.back());
  for (std::size_t i = word.size() - 1; i > 0; --i)
    prob *= model.transition(word[i], word[i - 1]);
  return prob;
}

std::vector<double> prefix_probabilities(const SequenceModel& model, const Pattern& s,
                                         std::size_t r) {
  std::vector<double> probs;
  probs.reserve(r);
  for (std::size_t m = 1; m <= r; ++m)
    probs.push_back(word_probability(model, s.first_letters(m)));
  return probs;
}

std::map<std::string, std::string> read_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  auto strip = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    auto stripped = strip(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos) throw std::runtime_error("malformed config line: " + line);
    kv[strip(stripped.substr(0, eq))] = strip(stripped.substr(eq + 1));
  }
  return kv;
}

SequenceModel model_from_config(const std::map<std::string, std::string>& kv) {
  auto floats = [&](const std::string& key, std::size_t count) {
    std::vector<double> out;
    std::istringstream ss(kv.at(key));
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.size() != count)
      throw std::runtime_error(key + " must have " + std::to_string(count) + " values");
    return out;
  };
  if (!kv.count("kind")) throw std::runtime_error("model config missing 'kind'");
  const auto& kind = kv.at("kind");
  if (kind == "iid") {
    auto p = floats("p", 4);
    return SequenceModel::iid({p[0], p[1], p[2], p[3]});
  }
  if (kind == "markov") {
    auto qf = floats("Q", 16);
    Matrix4 q;
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = 0; v < 4; ++v) q[u][v] = qf[4 * u + v];
    return SequenceModel::markov(q);
  }
  throw std::runtime_error("unknown model kind: " + kind);
}

ModelConfig read_model_config(const std::string& path) {
  auto kv = read_flat_config(path);
  ModelConfig cfg;
  cfg.model = model_from_config(kv);
  if (kv.count("seed")) cfg.seed = std::stoull(kv.at("seed"));
  return cfg;
}

}  // namespace cgrdst
