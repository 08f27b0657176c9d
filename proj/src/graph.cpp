#include "spextree/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "spextree/error.hpp"

namespace spextree {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
  adj_.resize(vertex_count);
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

auto Graph::has_edge(int u, int v) const -> bool {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

auto Graph::max_degree() const -> int {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

auto Graph::min_degree() const -> int {
  if (adj_.empty()) return 0;
  int best = degree(0);
  for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
  return best;
}

auto Graph::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    fail(ErrorCode::OutOfRange, "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) fail(ErrorCode::InvalidInputs, "self loop at " + std::to_string(u));
  auto& au = adj_[u];
  auto pos = std::lower_bound(au.begin(), au.end(), v);
  if (pos != au.end() && *pos == v)
    fail(ErrorCode::InvalidInputs, "repeated edge " + std::to_string(u) + " " + std::to_string(v));
  au.insert(pos, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

auto Graph::add_vertex() -> int {
  adj_.emplace_back();
  return vertex_count() - 1;
}

auto Graph::components() const -> std::vector<int> {
  std::vector<int> comp(vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj_[u])
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

auto Graph::is_connected() const -> bool {
  if (vertex_count() == 0) return true;
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

auto Graph::distances_from(int source) const -> std::vector<int> {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj_[u])
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

auto Graph::bipartition() const -> std::optional<std::vector<int>> {
  std::vector<int> colour(vertex_count(), -1);
  for (int s = 0; s < vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj_[u]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

auto empty_graph(int n) -> Graph { return Graph(n); }

auto complete_graph(int n) -> Graph {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

auto path_graph(int n) -> Graph {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

auto cycle_graph(int n) -> Graph {
  if (n < 3) fail(ErrorCode::InvalidInputs, "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

auto star_graph(int leaves) -> Graph {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

auto complete_bipartite(int a, int b) -> Graph {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

auto disjoint_stars(int copies, int order) -> Graph {
  if (copies < 0 || order < 1) fail(ErrorCode::InvalidInputs, "bad star parameters");
  Graph g(copies * order);
  for (int c = 0; c < copies; ++c)
    for (int leaf = 1; leaf < order; ++leaf) g.add_edge(c * order, c * order + leaf);
  return g;
}

auto disjoint_union(const Graph& left, const Graph& right) -> Graph {
  int shift = left.vertex_count();
  Graph g(shift + right.vertex_count());
  for (auto [u, v] : left.edges()) g.add_edge(u, v);
  for (auto [u, v] : right.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

auto join(const Graph& left, const Graph& right) -> Graph {
  Graph g = disjoint_union(left, right);
  int shift = left.vertex_count();
  for (int u = 0; u < shift; ++u)
    for (int v = 0; v < right.vertex_count(); ++v) g.add_edge(u, shift + v);
  return g;
}

namespace {

auto circulant_base(int n, int half) -> Graph {
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int k = 1; k <= half; ++k) {
      int w = (v + k) % n;
      if (!g.has_edge(v, w)) g.add_edge(v, w);
    }
  return g;
}

}  // namespace

auto regular_circulant(int n, int d) -> std::optional<Graph> {
  if (n < 0 || d < 0) fail(ErrorCode::InvalidInputs, "negative circulant parameters");
  if (d == 0) return Graph(n);
  if (d >= n) return std::nullopt;
  if (d % 2 == 1 && n % 2 == 1) return std::nullopt;
  Graph g = circulant_base(n, d / 2);
  if (d % 2 == 1)
    for (int v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);
  return g;
}

auto almost_regular_circulant(int n, int d) -> Graph {
  if (auto g = regular_circulant(n, d)) return *g;
  if (d >= n) fail(ErrorCode::InvalidInputs, "degree " + std::to_string(d) + " too large for " + std::to_string(n) + " vertices");
  // d odd, n odd: near-antipodal matching on n-1 vertices, then patch the
  // unmatched vertex with one extra edge.
  Graph g = circulant_base(n, d / 2);
  int half = (n - 1) / 2;
  for (int v = 0; v < half; ++v) g.add_edge(v, v + half);
  int last = n - 1;
  for (int x = 0; x < last; ++x)
    if (!g.has_edge(last, x)) {
      g.add_edge(last, x);
      return g;
    }
  fail(ErrorCode::InternalVerificationFailed, "almost-regular patch failed");
}

}  // namespace spextree
