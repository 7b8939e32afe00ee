#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgrdst/model.hpp"
#include "cgrdst/pattern.hpp"
#include "cgrdst/rng.hpp"

namespace cgrdst {

struct EmptyTreeError : std::runtime_error {
  EmptyTreeError() : std::runtime_error("tree has no nodes") {}
};

struct InsertionRecord {
  std::size_t n = 0;      // insertion index (1-based)
  std::size_t depth = 0;  // D_n, in edges
};

// The CGR-tree: a quaternary digital search tree built by inserting the
// reversed prefixes W(n) = U_n ... U_1 of the consumed sequence. One
// node is created per letter. Branch statistics (shortest branch ell_n,
// longest branch L_n) are maintained incrementally: a per-depth counter
// of vacant child slots gives ell_n = (min vacant depth) - 1 in O(1)
// amortized, and L_n is the running max node depth.
class CgrTree {
 public:
  CgrTree();

  // Consumes the next letter U_n, walks from the root along
  // U_n, U_{n-1}, ... until a vacant slot, creates the node there and
  // returns its index and depth D_n.
  InsertionRecord insert_letter(Nucleotide u);

  void insert_all(const Letters& letters) {
    for (auto u : letters) insert_letter(u);
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // ell_n: length of the shortest branch (min over directions s of X_n(s)).
  std::size_t shortest() const { return shortest_; }
  // L_n: length of the longest branch (max node depth).
  std::size_t longest() const { return longest_; }

  // depth -> node count, indices 1..longest().
  const std::vector<std::size_t>& depth_profile() const { return depth_profile_; }

  const Letters& history() const { return history_; }
  const std::vector<InsertionRecord>& insertions() const { return insertions_; }

  // X_n(s): length of the branch of the current tree along pattern s;
  // 0 if the level-1 node s_1 is absent.
  std::size_t branch_length(const Pattern& s) const;

  // M_n: depth of a node chosen uniformly among the n inserted nodes.
  std::size_t random_path_length(std::uint64_t seed) const;

  // One line per node: insertion_index,depth,path (letters from root).
  std::string dump() const;

  // Root-to-node paths in insertion order; path of node n is the word
  // W(n) truncated at its insertion depth.
  std::vector<Letters> node_paths() const;

  // Recount of shortest/longest by full traversal; test support.
  std::pair<std::size_t, std::size_t> recompute_extremes() const;

 private:
  static constexpr std::int32_t kVacant = -1;

  struct Node {
    std::array<std::int32_t, 4> child{kVacant, kVacant, kVacant, kVacant};
    std::uint32_t depth = 0;
    std::uint32_t insertion_index = 0;  // 0 for the root
  };

  std::vector<Node> nodes_;  // nodes_[0] is the root
  Letters history_;
  std::vector<InsertionRecord> insertions_;
  std::vector<std::size_t> depth_profile_;
  std::vector<std::size_t> vacant_per_depth_;  // vacant child slots at each depth
  std::size_t size_ = 0;
  std::size_t shortest_ = 0;
  std::size_t longest_ = 0;
};

// T_k(s) for k = 1..k_max over a fixed sequence: size of the first tree
// in which s^(k) is inserted. Entries the sequence never reaches are
// nullopt (NotReached is a value, not a fault). T_0(s) = 0 always.
std::vector<std::optional<std::size_t>> first_tree_sizes(const Pattern& s,
                                                         const Letters& seq,
                                                         std::size_t k_max);

inline std::optional<std::size_t> first_tree_size(const Pattern& s, const Letters& seq,
                                                  std::size_t k) {
  if (k == 0) return 0;
  return first_tree_sizes(s, seq, k)[k - 1];
}

// Incremental tracker of X_n(s) for one pattern: X grows by one exactly
// when the last X+1 letters spell s_{X+1} ... s_1 (the walk of W(n) then
// runs along the branch and lands on the vacant node s^(X+1)). O(X) per
// letter, no tree needed.
class BranchTracker {
 public:
  explicit BranchTracker(Pattern s) : s_(std::move(s)) {}

  // Feed U_n; returns true if X grew at this step.
  bool push(Nucleotide u);

  std::size_t branch_length() const { return x_; }
  std::size_t letters_consumed() const { return history_.size(); }
  // T_k for k = 1..branch_length().
  const std::vector<std::size_t>& growth_times() const { return growth_times_; }

 private:
  Pattern s_;
  Letters history_;
  std::vector<std::size_t> growth_times_;
  std::size_t x_ = 0;
};

// Length of the longest run of v in seq, by direct scan. Equals
// branch_length of the constant pattern v~ (tested, not assumed).
std::size_t longest_run(const Letters& seq, Nucleotide v);

}  // namespace cgrdst
