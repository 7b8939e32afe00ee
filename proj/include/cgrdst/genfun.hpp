#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgrdst/model.hpp"

namespace cgrdst {

struct ZeroProbabilityError : std::runtime_error {
  ZeroProbabilityError() : std::runtime_error("overlap term has zero probability") {}
};
struct SingularResolventError : std::runtime_error {
  SingularResolventError() : std::runtime_error("I - t*Qtilde numerically singular") {}
};
struct OutOfDomainError : std::runtime_error {
  explicit OutOfDomainError(const std::string& what) : std::runtime_error(what) {}
};

// Overlap (autocorrelation) set of w = s_1...s_r: the m in 1..r with
// s_r ... s_{r-m+1} = s_m ... s_1. Always contains r.
std::set<std::size_t> overlap_set(const Letters& w);

// A word together with its reversed-word prefix probabilities, overlap
// structure and source model; immutable once built.
class WordAnalysis {
 public:
  WordAnalysis(const SequenceModel& model, Letters word);

  const Letters& word() const { return word_; }
  std::size_t r() const { return word_.size(); }
  const SequenceModel& model() const { return model_; }
  // p(s^(m)), 1-based access.
  double prefix_probability(std::size_t m) const { return probs_[m - 1]; }
  const std::set<std::size_t>& overlaps() const { return overlaps_; }
  Nucleotide first() const { return word_.front(); }
  Nucleotide last() const { return word_.back(); }

 private:
  const SequenceModel& model_;
  Letters word_;
  std::vector<double> probs_;
  std::set<std::size_t> overlaps_;
};

// delta_r(t^{-1}) = sum over overlap m of 1 / (t^m p(s^(m))).
double delta_r(const WordAnalysis& a, double t);

// gamma_r(t) = (1-t)/(t p(s_r)) sum_{m>=1} Q^m(s_1, s_r) t^m, evaluated
// through the deflated resolvent (Qtilde = Q - 1 p^T), which converges
// for |t| < 1/gamma even where the raw series diverges.
double gamma_r(const WordAnalysis& a, double t);

// Phi(s^(r), t) = E[t^{Y_r}] = 1 / (gamma_r(t) + (1-t) delta_r(t^{-1})).
double phi(const WordAnalysis& a, double t);

// E[t^{Z_r(s)}] = 1 - (1-t) / (t^r p(s^(r)) (gamma_r(t) + (1-t) delta_r(t^{-1}))).
double genfun_Z(const WordAnalysis& a, double t);

// E[Y_r] and E[Z_r] via Richardson-extrapolated one-sided difference
// quotients at t = 1^- (the domain may end just past 1). The step is
// scaled by p(s^(r)): the curvature of these transforms grows like
// 1/p^2, so a fixed step cannot reach the tolerance for long words.
double mean_Y(const WordAnalysis& a);
double mean_Z(const WordAnalysis& a);

// Smallest real t* > 1 with gamma_r(t*) + (1-t*) delta_r(1/t*) = 0,
// searched below the resolvent domain edge 1/gamma. No sign change
// found is a value, not an error.
struct DenominatorRoot {
  bool found = false;
  double t = 0;  // meaningful only when found
};
DenominatorRoot denominator_root(const WordAnalysis& a);

// Check of |gamma_r(t) - 1| <= |1-t|/(1 - gamma |t|) * kappa' on a grid,
// with kappa' = gamma K / min_u p(u) and K estimated as
// sup_{m<=M,(u,v)} |Q^m(u,v) - p(v)| / gamma^m (M = 200; tail negligible
// since |Q^m - 1p^T| decays like gamma^m).
struct GammaBoundReport {
  double kappa_prime = 0;
  double K = 0;
  std::size_t truncation = 200;
  double max_slack = 0;  // max over grid of |gamma_r - 1| - bound
  bool holds = false;
};
GammaBoundReport gamma_bound_check(const WordAnalysis& a, const std::vector<double>& t_grid);

}  // namespace cgrdst
