#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spextree/graph.hpp"

namespace spextree {

class LabeledTree {
 public:
  LabeledTree() : graph_(1) {}
  // Throws NotATree unless the edges form a spanning tree on 0..n-1.
  LabeledTree(int vertex_count, const std::vector<Edge>& edges);
  explicit LabeledTree(Graph graph);

  auto vertex_count() const -> int { return graph_.vertex_count(); }
  auto edges() const -> std::vector<Edge> { return graph_.edges(); }
  auto degree(int v) const -> int { return graph_.degree(v); }
  auto neighbors(int v) const -> const std::vector<int>& { return graph_.neighbors(v); }
  auto has_edge(int u, int v) const -> bool { return graph_.has_edge(u, v); }
  auto graph() const -> const Graph& { return graph_; }

  friend auto operator==(const LabeledTree&, const LabeledTree&) -> bool = default;

 private:
  Graph graph_;
};

// A is the smaller colour class; on a tie, the class containing vertex 0.
struct TreeProfile {
  int m = 0;
  int l = 0;
  int delta = 0;
  int t = 0;
  std::vector<int> A;
  std::vector<int> B;
  std::vector<bool> in_A;
  std::vector<int> excess;  // deg(v) - delta on A, 0 on B

  auto excess_of(int v) const -> int { return excess[v]; }
};

// Edge-list text: one "u v" pair per line, '#' starts a comment line.
auto parse_tree(std::string_view text) -> LabeledTree;
auto read_tree_file(const std::string& path) -> LabeledTree;
auto format_edge_list(const Graph& g, std::string_view header = {}) -> std::string;

// Requires m >= 2.
auto profile(const LabeledTree& tree) -> TreeProfile;
auto family_feasible(int m, int l, int delta) -> bool;

// Relabel so that vertex v becomes perm[v].
auto relabel(const LabeledTree& tree, const std::vector<int>& perm) -> LabeledTree;

}  // namespace spextree
