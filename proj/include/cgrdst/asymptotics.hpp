#pragma once

#include <stdexcept>
#include <string>

#include "cgrdst/model.hpp"
#include "cgrdst/pattern.hpp"

namespace cgrdst {

struct NoSupportedCycleError : std::runtime_error {
  NoSupportedCycleError() : std::runtime_error("transition digraph has no supported cycle") {}
};
struct UnsupportedTransitionError : std::runtime_error {
  UnsupportedTransitionError()
      : std::runtime_error("pattern cycle traverses a zero-probability transition") {}
};

// h: entropy rate; h_plus / h_minus: extremal per-letter rates of
// ln(1/p(s^(n))), attained on the optimal cycles s_plus / s_minus
// (returned as empty-prefix periodic patterns). All in nats per letter.
struct RateConstants {
  double h_plus = 0;
  double h_minus = 0;
  double h = 0;
  Pattern s_plus{{}, {}};
  Pattern s_minus{{}, {}};
};

// h is the Markov entropy rate -sum_u p(u) sum_v Q(u,v) ln Q(u,v).
// h_plus / h_minus are the extreme mean cycles of the 4-vertex digraph
// with edge weight -ln Q(u,v) on supported (Q > 0) edges: the growth
// rate of p(s^(n)) along a pattern is the mean transition log-cost over
// its cycle, and the extremal rate over all patterns is the extremal
// cycle mean. Witness patterns traverse the optimal cycle in reverse
// vertex order (p reads words right to left).
RateConstants rate_constants(const SequenceModel& model);

// h(s) = lim (1/n) ln(1/p(s^(n))): the mean of -ln Q over the pattern's
// cycle (the prefix does not affect the limit). Throws
// UnsupportedTransitionError if the cycle uses a zero-probability edge.
double rate_of_pattern(const SequenceModel& model, const Pattern& s);

struct LimitSummary {
  double inv_h_plus = 0;   // limit of ell_n / ln n
  double inv_h = 0;        // limit of D_n / ln n and M_n / ln n
  double inv_h_minus = 0;  // limit of L_n / ln n
};

LimitSummary limit_summary(const SequenceModel& model);

// CSV line for the `constants` subcommand:
// h_plus,h,h_minus,inv_h_plus,inv_h,inv_h_minus,s_plus_cycle,s_minus_cycle
std::string constants_csv(const RateConstants& rc);

}  // namespace cgrdst
