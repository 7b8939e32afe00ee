#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgrdst/nucleotide.hpp"
#include "cgrdst/tree.hpp"

namespace cgrdst {

// Vertex of the unit square assigned to each letter:
// A=(0,0), C=(0,1), G=(1,1), T=(1,0).
inline std::pair<double, double> vertex_of(Nucleotide u) {
  switch (u) {
    case Nucleotide::A: return {0.0, 0.0};
    case Nucleotide::C: return {0.0, 1.0};
    case Nucleotide::G: return {1.0, 1.0};
    case Nucleotide::T: return {1.0, 0.0};
  }
  return {0.0, 0.0};
}

struct CgrPoint {
  double x = 0.5;
  double y = 0.5;
  std::size_t index = 0;  // 1-based position in the sequence
};

// Half-open dyadic subsquare Sw of side 1/2^|w|; all points of the
// trajectory whose current suffix is w fall inside it.
struct Subsquare {
  Letters word;
  double x0 = 0.0, y0 = 0.0;  // lower-left corner
  double side = 1.0;

  bool contains(double px, double py) const {
    return px >= x0 && px < x0 + side && py >= y0 && py < y0 + side;
  }
  std::pair<double, double> center() const { return {x0 + side / 2, y0 + side / 2}; }
};

Subsquare subsquare_of(const Letters& word);

// The iterated midpoint map: X_{n+1} = (X_n + vertex(U_{n+1})) / 2,
// starting from `start` (default: the center of the square).
std::vector<CgrPoint> cgr_trajectory(const Letters& seq, double start_x = 0.5,
                                     double start_y = 0.5);

// #{i >= |w| : point i lies in Sw}; equals the number of occurrences of
// w as a subword of the sequence.
std::size_t count_in_subsquare(const std::vector<CgrPoint>& points, const Letters& word);

// Historyless representation: the center of the subsquare of every node
// word of the tree shape (insertion order discarded).
std::vector<std::pair<Letters, CgrPoint>> historyless_points(const CgrTree& tree);

// CSV emission, 17 significant digits: "index,x,y" / "word,x,y".
std::string trajectory_csv(const std::vector<CgrPoint>& points);
std::string historyless_csv(const std::vector<std::pair<Letters, CgrPoint>>& points);

}  // namespace cgrdst
