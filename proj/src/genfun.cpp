#include "cgrdst/genfun.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace cgrdst {

namespace {

Eigen::Matrix4d deflated_matrix(const SequenceModel& model) {
  Eigen::Matrix4d qt;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) qt(u, v) = model.q()[u][v] - model.p()[v];
  return qt;
}

}  // namespace

std::set<std::size_t> overlap_set(const Letters& w) {
  if (w.empty()) throw std::invalid_argument("overlap_set needs a nonempty word");
  const std::size_t r = w.size();
  std::set<std::size_t> overlaps;
  for (std::size_t m = 1; m <= r; ++m) {
    bool match = true;
    for (std::size_t i = 0; i < m && match; ++i)
      match = w[r - 1 - i] == w[m - 1 - i];  // s_{r-i} == s_{m-i}
    if (match) overlaps.insert(m);
  }
  return overlaps;
}

WordAnalysis::WordAnalysis(const SequenceModel& model, Letters word)
    : model_(model), word_(std::move(word)), overlaps_(overlap_set(word_)) {
  probs_.reserve(word_.size());
  Letters prefix;
  for (auto u : word_) {
    prefix.push_back(u);
    probs_.push_back(word_probability(model_, prefix));
  }
}

double delta_r(const WordAnalysis& a, double t) {
  if (t == 0) throw OutOfDomainError("delta_r requires t != 0");
  double sum = 0;
  for (std::size_t m : a.overlaps()) {
    double pm = a.prefix_probability(m);
    if (pm <= 0) throw ZeroProbabilityError{};
    sum += 1.0 / (std::pow(t, static_cast<double>(m)) * pm);
  }
  return sum;
}

double gamma_r(const WordAnalysis& a, double t) {
  const SequenceModel& model = a.model();
  if (model.gamma() * std::abs(t) >= 1.0 - 1e-12)
    throw SingularResolventError{};
  if (t == 0) return 1.0;  // limit: the series vanishes faster than (1-t)/t
  // gamma_r(t) = 1 + (1-t)/(t p(s_r)) * [t Qt (I - t Qt)^{-1}](s_1, s_r)
  // with Qt = Q - 1 p^T; (Qt)^m = Q^m - 1 p^T for m >= 1 resums the
  // deflated series on the whole domain |t| < 1/gamma.
  Eigen::Matrix4d qt = deflated_matrix(model);
  Eigen::Matrix4d lhs = Eigen::Matrix4d::Identity() - t * qt;
  Eigen::FullPivLU<Eigen::Matrix4d> lu(lhs);
  if (!lu.isInvertible()) throw SingularResolventError{};
  Eigen::Vector4d e = Eigen::Vector4d::Zero();
  e(static_cast<int>(ordinal(a.last()))) = 1.0;
  Eigen::Vector4d x = lu.solve(e);
  double resolvent = t * (qt.row(static_cast<int>(ordinal(a.first()))) * x).value();
  return 1.0 + (1.0 - t) / (t * model.stationary(a.last())) * resolvent;
}

double phi(const WordAnalysis& a, double t) {
  if (t < 0) throw OutOfDomainError("phi requires t >= 0");
  if (t == 0) return 0.0;  // Y_r >= 1
  if (t == 1) return 1.0;
  double denom = gamma_r(a, t) + (1.0 - t) * delta_r(a, t);
  if (denom <= 0) throw OutOfDomainError("t is beyond the radius of convergence");
  return 1.0 / denom;
}

double genfun_Z(const WordAnalysis& a, double t) {
  if (t <= 0) throw OutOfDomainError("genfun_Z requires t > 0");
  if (t == 1) return 1.0;
  double denom = gamma_r(a, t) + (1.0 - t) * delta_r(a, t);
  if (denom <= 0) throw OutOfDomainError("t is beyond the radius of convergence");
  double pr = a.prefix_probability(a.r());
  return 1.0 - (1.0 - t) / (std::pow(t, static_cast<double>(a.r())) * pr * denom);
}

namespace {

// Richardson-extrapolated one-sided derivative at t = 1^-. The step
// scales with p(s^(r)): higher moments grow like powers of 1/p, so a
// fixed step loses all accuracy on low-probability words.
template <typename F>
double derivative_at_one(const F& f, double p_r) {
  double h = std::min(1e-6, 1e-3 * p_r);
  double d1 = (f(1.0) - f(1.0 - h)) / h;
  double d2 = (f(1.0) - f(1.0 - h / 2)) / (h / 2);
  return 2.0 * d2 - d1;
}

}  // namespace

double mean_Y(const WordAnalysis& a) {
  double pr = a.prefix_probability(a.r());
  return derivative_at_one([&](double t) { return phi(a, t); }, pr);
}

double mean_Z(const WordAnalysis& a) {
  double pr = a.prefix_probability(a.r());
  return derivative_at_one([&](double t) { return genfun_Z(a, t); }, pr);
}

DenominatorRoot denominator_root(const WordAnalysis& a) {
  const double gamma = a.model().gamma();
  const double t_max = gamma > 1e-12 ? (1.0 - 1e-6) / gamma : 1e6;
  auto d = [&](double t) { return gamma_r(a, t) + (1.0 - t) * delta_r(a, t); };

  // D(1) = 1 > 0; scan upward with a step fine near 1 (the root can sit
  // at 1 + kappa * p(s^(r))) and geometrically coarsening.
  double pr = a.prefix_probability(a.r());
  double step = std::max(1e-12, 1e-3 * pr);
  double lo = 1.0;
  while (lo < t_max) {
    double hi = std::min(lo + step, t_max);
    double d_hi = d(hi);
    if (d_hi <= 0) {
      // Bisection to 1e-12 on t.
      for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        double mid = (lo + hi) / 2;
        if (d(mid) <= 0)
          hi = mid;
        else
          lo = mid;
      }
      return {true, (lo + hi) / 2};
    }
    lo = hi;
    step *= 1.5;
  }
  return {false, 0.0};
}

GammaBoundReport gamma_bound_check(const WordAnalysis& a, const std::vector<double>& t_grid) {
  const SequenceModel& model = a.model();
  const double gamma = model.gamma();
  GammaBoundReport report;

  if (gamma > 1e-12) {
    // K = sup_m |Q^m(u,v) - p(v)| / gamma^m; truncated where gamma^m
    // falls below floating-point resolution of the numerator.
    Eigen::Matrix4d q;
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = 0; v < 4; ++v) q(u, v) = model.q()[u][v];
    Eigen::Matrix4d qm = Eigen::Matrix4d::Identity();
    double gm = 1.0;
    std::size_t m_used = 0;
    double K = 0;
    for (std::size_t m = 1; m <= 200; ++m) {
      qm = qm * q;
      gm *= gamma;
      if (gm < 1e-13) break;
      m_used = m;
      for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v)
          K = std::max(K, std::abs(qm(u, v) - model.p()[v]) / gm);
    }
    report.K = K;
    report.truncation = m_used;
    double min_p = *std::min_element(model.p().begin(), model.p().end());
    report.kappa_prime = gamma * K / min_p;
  }

  double max_slack = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    if (gamma * std::abs(t) >= 1.0) throw OutOfDomainError("grid point outside (-1/gamma, 1/gamma)");
    double lhs = std::abs(gamma_r(a, t) - 1.0);
    double rhs = std::abs(1.0 - t) / (1.0 - gamma * std::abs(t)) * report.kappa_prime;
    max_slack = std::max(max_slack, lhs - rhs);
  }
  report.max_slack = max_slack;
  report.holds = max_slack <= 1e-12;
  return report;
}

}  // namespace cgrdst
