#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace spextree {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, const std::vector<Edge>& edges);

  auto vertex_count() const -> int { return static_cast<int>(adj_.size()); }
  auto edge_count() const -> int { return edge_count_; }
  auto degree(int v) const -> int { return static_cast<int>(adj_[v].size()); }
  auto neighbors(int v) const -> const std::vector<int>& { return adj_[v]; }
  auto has_edge(int u, int v) const -> bool;
  auto max_degree() const -> int;
  auto min_degree() const -> int;
  auto edges() const -> std::vector<Edge>;

  // Throws OutOfRange on bad endpoints, InvalidInputs on loops or repeats.
  void add_edge(int u, int v);
  auto add_vertex() -> int;

  // Component index per vertex, components numbered by their lowest vertex.
  auto components() const -> std::vector<int>;
  auto is_connected() const -> bool;
  // -1 for unreachable vertices.
  auto distances_from(int source) const -> std::vector<int>;
  // Colour 0/1 per vertex if bipartite.
  auto bipartition() const -> std::optional<std::vector<int>>;

  friend auto operator==(const Graph&, const Graph&) -> bool = default;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

auto empty_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto star_graph(int leaves) -> Graph;
auto complete_bipartite(int a, int b) -> Graph;
// copies disjoint stars K_{1,order-1}; the centre of copy i is vertex i*order.
auto disjoint_stars(int copies, int order) -> Graph;
// left on 0..|left|-1, right shifted by |left|, all cross edges present.
auto join(const Graph& left, const Graph& right) -> Graph;
auto disjoint_union(const Graph& left, const Graph& right) -> Graph;
// Offsets +-1..+-floor(d/2), plus the antipodal matching when d is odd.
// nullopt when no d-regular circulant exists on n vertices.
auto regular_circulant(int n, int d) -> std::optional<Graph>;
// d-regular when possible, otherwise one vertex of degree d+1 and the rest d.
// Requires n >= d+1 (n >= d+2 when the parity fix is needed).
auto almost_regular_circulant(int n, int d) -> Graph;

}  // namespace spextree
