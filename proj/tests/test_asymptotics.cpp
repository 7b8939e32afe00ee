#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "cgrdst/asymptotics.hpp"

using namespace cgrdst;

namespace {

Matrix4 sticky_q() {
  Matrix4 q;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) q[u][v] = u == v ? 0.7 : 0.1;
  return q;
}

struct BruteExtremes {
  double max_rate;
  double min_rate;
  double mean_rate;  // (1/n) E[ln(1/p(U^(n)))]
};

// Exhaustive sweep over all 4^n words; words are built right to left so
// each step appends one chain transition.
BruteExtremes brute_force_rates(const SequenceModel& model, std::size_t n) {
  BruteExtremes out{-1e300, 1e300, 0.0};
  // (letters placed, rightmost-processed letter, -ln prob so far, prob so far)
  auto visit = [&](auto&& self, std::size_t placed, Nucleotide prev, double logcost,
                   double prob) -> void {
    if (placed == n) {
      out.max_rate = std::max(out.max_rate, logcost / n);
      out.min_rate = std::min(out.min_rate, logcost / n);
      out.mean_rate += prob * logcost / n;
      return;
    }
    for (auto next : kAlphabet) {
      double q = model.transition(prev, next);
      if (q <= 0) continue;
      self(self, placed + 1, next, logcost - std::log(q), prob * q);
    }
  };
  for (auto last : kAlphabet) {
    double p = model.stationary(last);
    if (p <= 0) continue;
    visit(visit, 1, last, -std::log(p), p);
  }
  return out;
}

}  // namespace

TEST_CASE("iid closed forms") {
  auto uniform = rate_constants(SequenceModel::iid({0.25, 0.25, 0.25, 0.25}));
  CHECK(uniform.h == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(uniform.h_plus == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(uniform.h_minus == doctest::Approx(std::log(4.0)).epsilon(1e-12));

  auto model = SequenceModel::iid({0.4, 0.3, 0.2, 0.1});
  auto rc = rate_constants(model);
  CHECK(rc.h_plus == doctest::Approx(std::log(10.0)).epsilon(1e-12));
  CHECK(rc.h_minus == doctest::Approx(-std::log(0.4)).epsilon(1e-12));
  double h = 0;
  for (double p : {0.4, 0.3, 0.2, 0.1}) h -= p * std::log(p);
  CHECK(rc.h == doctest::Approx(h).epsilon(1e-12));
  CHECK(rc.h == doctest::Approx(1.279854).epsilon(1e-6));
}

TEST_CASE("markov mean cycles") {
  auto rc = rate_constants(SequenceModel::markov(sticky_q()));
  CHECK(rc.h_minus == doctest::Approx(-std::log(0.7)).epsilon(1e-12));  // self-loop
  CHECK(rc.h_plus == doctest::Approx(-std::log(0.1)).epsilon(1e-12));   // off-diagonal cycle
  CHECK(rc.h == doctest::Approx(0.940449).epsilon(1e-6));
}

TEST_CASE("sandwich and witness consistency") {
  std::vector<SequenceModel> models = {
      SequenceModel::iid({0.6, 0.1, 0.1, 0.2}),
      SequenceModel::markov(sticky_q()),
      SequenceModel::markov({{{0.5, 0.3, 0.1, 0.1},
                              {0.2, 0.4, 0.2, 0.2},
                              {0.1, 0.1, 0.7, 0.1},
                              {0.25, 0.25, 0.25, 0.25}}})};
  for (const auto& model : models) {
    auto rc = rate_constants(model);
    CHECK(rc.h_minus <= rc.h + 1e-12);
    CHECK(rc.h <= rc.h_plus + 1e-12);
    CHECK(rate_of_pattern(model, rc.s_plus) == doctest::Approx(rc.h_plus).epsilon(1e-12));
    CHECK(rate_of_pattern(model, rc.s_minus) == doctest::Approx(rc.h_minus).epsilon(1e-12));
  }
}

TEST_CASE("rate_of_pattern examples") {
  auto iid = SequenceModel::iid({0.3, 0.3, 0.2, 0.2});
  CHECK(rate_of_pattern(iid, Pattern::constant(Nucleotide::A)) ==
        doctest::Approx(std::log(1.0 / 0.3)).epsilon(1e-12));

  auto markov = SequenceModel::markov(sticky_q());
  CHECK(rate_of_pattern(markov, Pattern::constant(Nucleotide::A)) ==
        doctest::Approx(-std::log(0.7)).epsilon(1e-12));
  CHECK(rate_of_pattern(markov, Pattern::periodic("", "AC")) ==
        doctest::Approx(-std::log(0.1)).epsilon(1e-12));

  Matrix4 q = sticky_q();
  q[0][1] = 0.0;
  q[0][0] = 0.8;
  CHECK_THROWS_AS(rate_of_pattern(SequenceModel::markov(q), Pattern::periodic("", "AC")),
                  UnsupportedTransitionError);
}

TEST_CASE("brute-force window around the mean-cycle constants") {
  auto model = SequenceModel::markov(sticky_q());
  auto rc = rate_constants(model);
  double max_abs_log = -std::log(0.1);
  double c = 2 * max_abs_log;
  double prev_mean = 1e300;
  for (std::size_t n : {8, 10}) {  // acceptance suite also runs n = 12
    auto brute = brute_force_rates(model, n);
    CHECK(brute.max_rate <= rc.h_plus + 1e-12);
    CHECK(brute.max_rate >= rc.h_plus - c / n);
    CHECK(brute.min_rate >= rc.h_minus - 1e-12);
    CHECK(brute.min_rate <= rc.h_minus + c / n);
    CHECK(std::abs(brute.mean_rate - rc.h) <= c / n);
    CHECK(brute.mean_rate <= prev_mean + 1e-12);
    CHECK(brute.mean_rate >= rc.h - 1e-12);
    prev_mean = brute.mean_rate;
  }
}

TEST_CASE("limit summary reference lines") {
  auto uniform = limit_summary(SequenceModel::iid({0.25, 0.25, 0.25, 0.25}));
  CHECK(uniform.inv_h_plus == doctest::Approx(1 / std::log(4.0)).epsilon(1e-12));
  CHECK(uniform.inv_h == doctest::Approx(0.72135).epsilon(1e-4));
  CHECK(uniform.inv_h_minus == doctest::Approx(uniform.inv_h_plus).epsilon(1e-12));

  auto skewed = limit_summary(SequenceModel::iid({0.6, 0.1, 0.1, 0.2}));
  double ln_n = std::log(1e5);
  CHECK(ln_n * skewed.inv_h_plus == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(ln_n * skewed.inv_h == doctest::Approx(10.573).epsilon(1e-3));
  CHECK(ln_n * skewed.inv_h_minus == doctest::Approx(22.536).epsilon(1e-3));
}

TEST_CASE("constants csv shape") {
  auto rc = rate_constants(SequenceModel::iid({0.25, 0.25, 0.25, 0.25}));
  auto csv = constants_csv(rc);
  CHECK(csv.rfind("h_plus,h,h_minus,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
