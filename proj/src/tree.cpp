#include "cgrdst/tree.hpp"

#include <algorithm>
#include <sstream>

namespace cgrdst {

CgrTree::CgrTree() {
  nodes_.push_back(Node{});
  // The root's four child slots are the only external nodes.
  vacant_per_depth_.assign(2, 0);
  vacant_per_depth_[1] = 4;
}

InsertionRecord CgrTree::insert_letter(Nucleotide u) {
  history_.push_back(u);
  const std::size_t n = history_.size();

  // Walk from the root along U_n, U_{n-1}, ... to the first vacant slot.
  std::size_t cur = 0;
  std::size_t depth = 0;
  for (;;) {
    Nucleotide letter = history_[n - 1 - depth];
    ++depth;
    std::int32_t& slot = nodes_[cur].child[ordinal(letter)];
    if (slot == kVacant) {
      slot = static_cast<std::int32_t>(nodes_.size());
      Node node;
      node.depth = static_cast<std::uint32_t>(depth);
      node.insertion_index = static_cast<std::uint32_t>(n);
      nodes_.push_back(node);
      break;
    }
    cur = static_cast<std::size_t>(slot);
  }

  ++size_;
  longest_ = std::max(longest_, depth);
  if (depth_profile_.size() <= depth) depth_profile_.resize(depth + 1, 0);
  ++depth_profile_[depth];

  // The new node closes one slot at its depth and opens four below it.
  if (vacant_per_depth_.size() <= depth + 1) vacant_per_depth_.resize(depth + 2, 0);
  --vacant_per_depth_[depth];
  vacant_per_depth_[depth + 1] += 4;
  std::size_t min_vacant = shortest_ + 1;
  while (vacant_per_depth_[min_vacant] == 0) ++min_vacant;
  shortest_ = min_vacant - 1;

  InsertionRecord rec{n, depth};
  insertions_.push_back(rec);
  return rec;
}

std::size_t CgrTree::branch_length(const Pattern& s) const {
  std::size_t cur = 0;
  std::size_t k = 0;
  for (;;) {
    // A finite pattern must outlast the branch it measures;
    // Pattern::letter throws PatternTooShort past its end.
    Nucleotide letter = s.letter(k + 1);
    std::int32_t slot = nodes_[cur].child[ordinal(letter)];
    if (slot == kVacant) return k;
    cur = static_cast<std::size_t>(slot);
    ++k;
  }
}

std::size_t CgrTree::random_path_length(std::uint64_t seed) const {
  if (empty()) throw EmptyTreeError{};
  SplitMix64 rng(seed);
  return insertions_[rng.next_below(size_)].depth;
}

std::vector<Letters> CgrTree::node_paths() const {
  std::vector<Letters> paths(nodes_.size());
  // Iterative DFS; nodes_[0] is the root with an empty path.
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < 4; ++v) {
      std::int32_t child = nodes_[cur].child[v];
      if (child == kVacant) continue;
      paths[child] = paths[cur];
      paths[child].push_back(kAlphabet[v]);
      stack.push_back(static_cast<std::size_t>(child));
    }
  }
  std::vector<Letters> by_insertion(size_);
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    by_insertion[nodes_[i].insertion_index - 1] = paths[i];
  return by_insertion;
}

std::string CgrTree::dump() const {
  auto paths = node_paths();
  std::ostringstream out;
  for (std::size_t n = 1; n <= size_; ++n)
    out << n << ',' << paths[n - 1].size() << ',' << letters_to_string(paths[n - 1]) << '\n';
  return out.str();
}

std::pair<std::size_t, std::size_t> CgrTree::recompute_extremes() const {
  std::size_t min_vacant = SIZE_MAX;
  std::size_t max_depth = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [cur, depth] = stack.back();
    stack.pop_back();
    max_depth = std::max(max_depth, depth);
    for (std::size_t v = 0; v < 4; ++v) {
      std::int32_t child = nodes_[cur].child[v];
      if (child == kVacant)
        min_vacant = std::min(min_vacant, depth + 1);
      else
        stack.push_back({static_cast<std::size_t>(child), depth + 1});
    }
  }
  return {min_vacant - 1, max_depth};
}

bool BranchTracker::push(Nucleotide u) {
  history_.push_back(u);
  const std::size_t n = history_.size();
  const std::size_t m = x_ + 1;
  if (s_.is_finite() && x_ >= s_.finite_length()) return false;
  if (n < m) return false;
  // X grows iff U_n ... U_{n-m+1} = s_1 ... s_m.
  for (std::size_t k = 1; k <= m; ++k)
    if (history_[n - k] != s_.letter(k)) return false;
  x_ = m;
  growth_times_.push_back(n);
  return true;
}

std::vector<std::optional<std::size_t>> first_tree_sizes(const Pattern& s, const Letters& seq,
                                                         std::size_t k_max) {
  BranchTracker tracker(s);
  for (auto u : seq) tracker.push(u);
  std::vector<std::optional<std::size_t>> out(k_max);
  const auto& times = tracker.growth_times();
  for (std::size_t k = 1; k <= k_max; ++k)
    out[k - 1] = k <= times.size() ? std::optional<std::size_t>(times[k - 1]) : std::nullopt;
  return out;
}

std::size_t longest_run(const Letters& seq, Nucleotide v) {
  std::size_t best = 0, run = 0;
  for (auto u : seq) {
    run = (u == v) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace cgrdst
