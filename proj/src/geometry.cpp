#include "cgrdst/geometry.hpp"

#include <cstdio>
#include <sstream>

namespace cgrdst {

namespace {

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

Subsquare subsquare_of(const Letters& word) {
  Subsquare sq;
  sq.word = word;
  double x = 0, y = 0, scale = 1;
  // Corner of Sw = sum_{k=1..n} vertex(w_k) / 2^{n-k+1}; exact in
  // doubles since every value is dyadic.
  for (auto u : word) {
    auto [vx, vy] = vertex_of(u);
    x = (x + vx) / 2;
    y = (y + vy) / 2;
    scale /= 2;
  }
  sq.x0 = x;
  sq.y0 = y;
  sq.side = scale;
  return sq;
}

std::vector<CgrPoint> cgr_trajectory(const Letters& seq, double start_x, double start_y) {
  std::vector<CgrPoint> points;
  points.reserve(seq.size());
  double x = start_x, y = start_y;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto [vx, vy] = vertex_of(seq[i]);
    x = (x + vx) / 2;
    y = (y + vy) / 2;
    points.push_back({x, y, i + 1});
  }
  return points;
}

std::size_t count_in_subsquare(const std::vector<CgrPoint>& points, const Letters& word) {
  if (word.empty()) throw std::invalid_argument("count_in_subsquare needs a nonempty word");
  Subsquare sq = subsquare_of(word);
  std::size_t count = 0;
  for (const auto& pt : points)
    if (pt.index >= word.size() && sq.contains(pt.x, pt.y)) ++count;
  return count;
}

std::vector<std::pair<Letters, CgrPoint>> historyless_points(const CgrTree& tree) {
  if (tree.empty()) throw EmptyTreeError{};
  std::vector<std::pair<Letters, CgrPoint>> out;
  out.reserve(tree.size());
  for (const auto& path : tree.node_paths()) {
    auto [cx, cy] = subsquare_of(path).center();
    out.push_back({path, CgrPoint{cx, cy, out.size() + 1}});
  }
  return out;
}

std::string trajectory_csv(const std::vector<CgrPoint>& points) {
  std::string out = "index,x,y\n";
  for (const auto& pt : points) {
    out += std::to_string(pt.index);
    out += ',';
    append_double(out, pt.x);
    out += ',';
    append_double(out, pt.y);
    out += '\n';
  }
  return out;
}

std::string historyless_csv(const std::vector<std::pair<Letters, CgrPoint>>& points) {
  std::string out = "word,x,y\n";
  for (const auto& [word, pt] : points) {
    out += letters_to_string(word);
    out += ',';
    append_double(out, pt.x);
    out += ',';
    append_double(out, pt.y);
    out += '\n';
  }
  return out;
}

}  // namespace cgrdst
