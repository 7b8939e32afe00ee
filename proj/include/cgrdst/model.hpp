#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "cgrdst/nucleotide.hpp"
#include "cgrdst/pattern.hpp"
#include "cgrdst/rng.hpp"

namespace cgrdst {

using Matrix4 = std::array<std::array<double, 4>, 4>;
using Vector4 = std::array<double, 4>;

struct NonStochasticError : std::runtime_error {
  explicit NonStochasticError(const std::string& what) : std::runtime_error(what) {}
};
struct ReducibleError : std::runtime_error {
  explicit ReducibleError(const std::string& what) : std::runtime_error(what) {}
};

// Stationary distribution of a row-stochastic 4x4 matrix, by power
// iteration (tolerance 1e-13, at most 1e6 sweeps).
Vector4 stationary_of(const Matrix4& q);

// Modulus of the second-largest eigenvalue of q.
double second_eigenvalue_modulus(const Matrix4& q);

// Order-1 Markov source over {A,C,G,T}; i.i.d. is the degenerate case
// where every row of Q equals the letter distribution. Immutable after
// construction and safe to share across threads.
class SequenceModel {
 public:
  enum class Kind { iid, markov };

  static SequenceModel iid(const Vector4& p);
  static SequenceModel markov(const Matrix4& q);
  // Markov model with a caller-supplied stationary vector; p is
  // validated against q, not recomputed.
  static SequenceModel markov(const Matrix4& q, const Vector4& p);

  Kind kind() const { return kind_; }
  const Matrix4& q() const { return q_; }
  const Vector4& p() const { return p_; }
  double gamma() const { return gamma_; }

  double transition(Nucleotide from, Nucleotide to) const {
    return q_[ordinal(from)][ordinal(to)];
  }
  double stationary(Nucleotide u) const { return p_[ordinal(u)]; }

 private:
  SequenceModel(Kind kind, Matrix4 q, Vector4 p);

  Kind kind_;
  Matrix4 q_;
  Vector4 p_;
  double gamma_;
};

struct SequenceOrigin {
  enum class Kind { generated, file } kind = Kind::generated;
  std::uint64_t seed = 0;
  std::string path;
  std::string record_id;
};

struct Sequence {
  Letters letters;
  SequenceOrigin origin;

  std::size_t length() const { return letters.size(); }
};

// Draws n letters: U_1 from the stationary vector, U_{k+1} from row
// Q(U_k, .). Deterministic for fixed (model, n, seed).
Sequence generate(const SequenceModel& model, std::size_t n, std::uint64_t seed);

// Reversed-word probability p(s^(m)) = P(U_1 = s_m, ..., U_m = s_1),
// i.e. the word read right-to-left as a chain trajectory:
//   p(s_m) Q(s_m, s_{m-1}) ... Q(s_2, s_1).
// This is the only place the reversed-word convention lives.
double word_probability(const SequenceModel& model, const Letters& word);

inline double word_probability(const SequenceModel& model, const std::string& word) {
  return word_probability(model, letters_from_string(word));
}

// p(s^(m)) for m = 1..r along a pattern.
std::vector<double> prefix_probabilities(const SequenceModel& model, const Pattern& s,
                                         std::size_t r);

// Flat key=value text config; '#' lines are comments.
std::map<std::string, std::string> read_flat_config(const std::string& path);

// Builds a model from flat-config keys: kind=iid|markov, p=4 floats,
// Q=16 floats row-major.
SequenceModel model_from_config(const std::map<std::string, std::string>& kv);

// Model config file: the keys above plus an optional seed.
struct ModelConfig {
  SequenceModel model = SequenceModel::iid({0.25, 0.25, 0.25, 0.25});
  std::uint64_t seed = 0;
};
ModelConfig read_model_config(const std::string& path);

}  // namespace cgrdst
