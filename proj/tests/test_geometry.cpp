#include <doctest.h>

#include <cmath>

#include "cgrdst/geometry.hpp"
#include "cgrdst/model.hpp"

using namespace cgrdst;

namespace {

// Independent oracle: occurrences of w as a subword of seq.
std::size_t substring_count(const Letters& seq, const Letters& w) {
  if (w.size() > seq.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + w.size() <= seq.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < w.size() && match; ++j) match = seq[i + j] == w[j];
    if (match) ++count;
  }
  return count;
}

Letters word_from_code(std::size_t code, std::size_t m) {
  Letters w(m, Nucleotide::A);
  for (std::size_t i = 0; i < m; ++i, code >>= 2) w[i] = kAlphabet[code & 3];
  return w;
}

}  // namespace

TEST_CASE("trajectory basics") {
  auto pts = cgr_trajectory(letters_from_string("A"));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].x == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(pts[0].y == doctest::Approx(0.25).epsilon(1e-15));

  // Point 3 of ATG... lies in the subsquare of ATG.
  auto pts2 = cgr_trajectory(letters_from_string("ATGCGAGTGT"));
  CHECK(subsquare_of(letters_from_string("ATG")).contains(pts2[2].x, pts2[2].y));
  CHECK(subsquare_of(letters_from_string("TGC")).contains(pts2[3].x, pts2[3].y));
}

TEST_CASE("closed form and backward recovery of the trajectory") {
  auto model = SequenceModel::iid({0.25, 0.25, 0.25, 0.25});
  auto seq = generate(model, 60, 17).letters;
  auto pts = cgr_trajectory(seq);
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    // X_k = sum_j vertex(U_j) / 2^{k-j+1} + start / 2^k
    double x = 0.5, y = 0.5;
    for (std::size_t j = 1; j <= k; ++j) {
      auto [vx, vy] = vertex_of(seq[j - 1]);
      x = (x + vx) / 2;  // equals the closed form, evaluated stably
      y = (y + vy) / 2;
    }
    CHECK(std::abs(pts[k - 1].x - x) < 1e-12);
    CHECK(std::abs(pts[k - 1].y - y) < 1e-12);
    // X_{k-1} = 2 X_k - vertex(U_k)
    auto [vx, vy] = vertex_of(seq[k - 1]);
    double px = k >= 2 ? pts[k - 2].x : 0.5;
    double py = k >= 2 ? pts[k - 2].y : 0.5;
    CHECK(std::abs(2 * pts[k - 1].x - vx - px) < 1e-12);
    CHECK(std::abs(2 * pts[k - 1].y - vy - py) < 1e-12);
  }
}

TEST_CASE("single-letter subsquares partition the trajectory") {
  auto seq = generate(SequenceModel::iid({0.4, 0.3, 0.2, 0.1}), 500, 3).letters;
  auto pts = cgr_trajectory(seq);
  std::size_t total = 0;
  for (auto v : kAlphabet) total += count_in_subsquare(pts, {v});
  CHECK(total == seq.size());
}

TEST_CASE("subsquare counts equal substring counts") {
  auto model = SequenceModel::iid({0.25, 0.25, 0.25, 0.25});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto seq = generate(model, 1000, seed).letters;
    auto pts = cgr_trajectory(seq);
    for (std::size_t m = 1; m <= 6; ++m) {
      // Sample words; the acceptance suite sweeps all of them.
      for (std::size_t code = 0; code < (std::size_t(1) << (2 * m)); code += (m < 3 ? 1 : 7)) {
        auto w = word_from_code(code, m);
        CHECK(count_in_subsquare(pts, w) == substring_count(seq, w));
      }
    }
    // Longer than the sequence: zero.
    Letters longw(seq.size() + 1, Nucleotide::G);
    CHECK(count_in_subsquare(pts, longw) == 0);
  }
}

TEST_CASE("subsquare tiles exactly into its four children") {
  auto w = letters_from_string("GAT");
  auto parent = subsquare_of(w);
  double area = 0;
  for (auto c : kAlphabet) {
    Letters child_word = {c};
    child_word.insert(child_word.end(), w.begin(), w.end());
    // Child in the tree sense: one more leading letter, nested square.
    auto child = subsquare_of(child_word);
    CHECK(child.side == parent.side / 2);
    CHECK(parent.contains(child.x0, child.y0));
    CHECK(parent.contains(child.x0 + child.side * 0.999, child.y0 + child.side * 0.999));
    area += child.side * child.side;
  }
  CHECK(area == doctest::Approx(parent.side * parent.side).epsilon(1e-15));
}

TEST_CASE("historyless representation") {
  CgrTree tree;
  tree.insert_letter(Nucleotide::G);
  auto pts = historyless_points(tree);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].second.x == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(pts[0].second.y == doctest::Approx(0.75).epsilon(1e-15));

  CgrTree big;
  big.insert_all(letters_from_string("GAGCACAGTGGAAGGG"));
  auto all = historyless_points(big);
  CHECK(all.size() == big.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK((all[i].second.x != all[j].second.x || all[i].second.y != all[j].second.y));
}

TEST_CASE("quadrant addressing: point n is in Sw iff w is a suffix") {
  auto seq = generate(SequenceModel::markov([] {
                        Matrix4 q;
                        for (std::size_t u = 0; u < 4; ++u)
                          for (std::size_t v = 0; v < 4; ++v) q[u][v] = u == v ? 0.7 : 0.1;
                        return q;
                      }()),
                      1000, 23)
                 .letters;
  auto pts = cgr_trajectory(seq);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t trial = 0; trial < 20; ++trial) {
      auto w = word_from_code(trial * 2654435761u, m);
      auto sq = subsquare_of(w);
      for (std::size_t n = m; n <= seq.size(); n += 37) {
        bool suffix = true;
        for (std::size_t j = 0; j < m && suffix; ++j)
          suffix = seq[n - 1 - j] == w[m - 1 - j];
        CHECK(sq.contains(pts[n - 1].x, pts[n - 1].y) == suffix);
      }
    }
  }
}

TEST_CASE("trajectory csv uses 17 significant digits") {
  auto pts = cgr_trajectory(letters_from_string("AC"));
  auto csv = trajectory_csv(pts);
  CHECK(csv.rfind("index,x,y\n", 0) == 0);
  CHECK(csv.find("0.125") != std::string::npos);
}
