#pragma once

#include <map>
#include <vector>

#include "spextree/graph.hpp"
#include "spextree/tree.hpp"

namespace spextree {

// Subgraph of T induced by a subset I of A together with the middle vertex
// of every length-2 path between two members of I.
class InducedForest {
 public:
  InducedForest() = default;
  InducedForest(const LabeledTree& tree, std::vector<int> vertices);

  auto vertices() const -> const std::vector<int>& { return vertices_; }
  auto contains(int v) const -> bool;
  auto degree(int v) const -> int;
  auto neighbors(int v) const -> std::vector<int>;
  auto edge_count() const -> int { return local_.edge_count(); }
  auto is_tree() const -> bool;
  auto edges() const -> std::vector<Edge>;
  // Tree distance between two members; -1 if disconnected.
  auto distance(int u, int v) const -> int;
  // v and every w whose path to root passes through v. Throws NotConnected
  // or VertexAbsent.
  auto rooted_subtree(int root, int v) const -> std::vector<int>;
  // Children of v when rooted at root (sorted by label).
  auto children(int root, int v) const -> std::vector<int>;

 private:
  auto local(int v) const -> int;

  std::vector<int> vertices_;
  std::vector<int> index_;  // T label -> local index or -1
  Graph local_;
};

// Throws InvalidSubset if I is not contained in A.
auto induced_forest(const LabeledTree& tree, const TreeProfile& p, const std::vector<int>& I) -> InducedForest;

struct Decomposition {
  std::vector<int> J;
  std::vector<int> J1;
  std::vector<int> J2;
  std::vector<int> Jprime;
  std::map<int, std::vector<int>> A_sets;  // v in J' -> A_v
  // The minimum J' is found exactly for every input; kept for the report format.
  bool greedy_fallback = false;
  InducedForest forest;  // T^{J'}

  auto a(int v) const -> int;
  auto in_Jprime(int v) const -> bool;
};

auto decompose(const LabeledTree& tree, const TreeProfile& p) -> Decomposition;

// Members of A at distance exactly two from v.
auto second_neighbors_in_A(const LabeledTree& tree, const TreeProfile& p, int v) -> std::vector<int>;

}  // namespace spextree
