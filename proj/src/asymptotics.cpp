#include "cgrdst/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace cgrdst {

namespace {

struct Cycle {
  std::vector<std::size_t> vertices;  // v_0 -> v_1 -> ... -> v_0
  double mean = 0;
};

// All simple cycles of the supported-edge digraph (at most 4 vertices,
// so exhaustive enumeration is exact and cheap). Canonical form: the
// smallest vertex first.
std::vector<Cycle> supported_cycles(const Matrix4& q) {
  std::vector<Cycle> cycles;
  auto weight = [&](std::size_t u, std::size_t v) { return -std::log(q[u][v]); };
  auto supported = [&](std::size_t u, std::size_t v) { return q[u][v] > 0; };

  std::vector<std::size_t> perm;
  std::vector<bool> used(4, false);
  auto emit = [&]() {
    double total = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      std::size_t u = perm[i], v = perm[(i + 1) % perm.size()];
      if (!supported(u, v)) return;
      total += weight(u, v);
    }
    cycles.push_back({perm, total / static_cast<double>(perm.size())});
  };
  // DFS over vertex sequences starting at their smallest element.
  auto extend = [&](auto&& self) -> void {
    emit();
    for (std::size_t v = perm.front() + 1; v < 4; ++v) {
      if (used[v]) continue;
      used[v] = true;
      perm.push_back(v);
      self(self);
      perm.pop_back();
      used[v] = false;
    }
  };
  for (std::size_t start = 0; start < 4; ++start) {
    perm = {start};
    std::fill(used.begin(), used.end(), false);
    used[start] = true;
    extend(extend);
  }
  return cycles;
}

// The reversed-word probability reads transitions right to left, so the
// pattern achieving a cycle's rate spells the cycle in reverse.
Pattern pattern_of_cycle(const std::vector<std::size_t>& vertices) {
  Letters cycle;
  cycle.push_back(kAlphabet[vertices.front()]);
  for (std::size_t i = vertices.size(); i > 1; --i) cycle.push_back(kAlphabet[vertices[i - 1]]);
  return Pattern({}, cycle);
}

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out += buf;
}

}  // namespace

RateConstants rate_constants(const SequenceModel& model) {
  auto cycles = supported_cycles(model.q());
  if (cycles.empty()) throw NoSupportedCycleError{};

  const Cycle* best_min = &cycles.front();
  const Cycle* best_max = &cycles.front();
  for (const auto& c : cycles) {
    if (c.mean < best_min->mean) best_min = &c;
    if (c.mean > best_max->mean) best_max = &c;
  }

  double h = 0;
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v)
      if (model.q()[u][v] > 0) h -= model.p()[u] * model.q()[u][v] * std::log(model.q()[u][v]);

  RateConstants rc;
  rc.h = h;
  rc.h_plus = best_max->mean;
  rc.h_minus = best_min->mean;
  rc.s_plus = pattern_of_cycle(best_max->vertices);
  rc.s_minus = pattern_of_cycle(best_min->vertices);
  return rc;
}

double rate_of_pattern(const SequenceModel& model, const Pattern& s) {
  const Letters& cycle = s.cycle();
  if (cycle.empty())
    throw std::invalid_argument("rate_of_pattern needs an eventually periodic pattern");
  double total = 0;
  for (std::size_t m = 0; m < cycle.size(); ++m) {
    Nucleotide cur = cycle[m];
    Nucleotide next = cycle[(m + 1) % cycle.size()];
    double q = model.transition(next, cur);  // transitions read right to left
    if (q <= 0) throw UnsupportedTransitionError{};
    total -= std::log(q);
  }
  return total / static_cast<double>(cycle.size());
}

LimitSummary limit_summary(const SequenceModel& model) {
  auto rc = rate_constants(model);
  return {1.0 / rc.h_plus, 1.0 / rc.h, 1.0 / rc.h_minus};
}

std::string constants_csv(const RateConstants& rc) {
  std::string out = "h_plus,h,h_minus,inv_h_plus,inv_h,inv_h_minus,s_plus_cycle,s_minus_cycle\n";
  append_double(out, rc.h_plus);
  out += ',';
  append_double(out, rc.h);
  out += ',';
  append_double(out, rc.h_minus);
  out += ',';
  append_double(out, 1.0 / rc.h_plus);
  out += ',';
  append_double(out, 1.0 / rc.h);
  out += ',';
  append_double(out, 1.0 / rc.h_minus);
  out += ',';
  out += letters_to_string(rc.s_plus.cycle());
  out += ',';
  out += letters_to_string(rc.s_minus.cycle());
  out += '\n';
  return out;
}

}  // namespace cgrdst
