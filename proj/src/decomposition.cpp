#include "spextree/decomposition.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "spextree/error.hpp"

namespace spextree {

InducedForest::InducedForest(const LabeledTree& tree, std::vector<int> vertices)
    : vertices_(std::move(vertices)), index_(tree.vertex_count(), -1), local_(static_cast<int>(vertices_.size())) {
  std::sort(vertices_.begin(), vertices_.end());
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) index_[vertices_[i]] = i;
  for (int u : vertices_)
    for (int w : tree.neighbors(u))
      if (u < w && index_[w] != -1) local_.add_edge(index_[u], index_[w]);
}

auto InducedForest::local(int v) const -> int {
  if (v < 0 || v >= static_cast<int>(index_.size()) || index_[v] == -1)
    fail(ErrorCode::VertexAbsent, "vertex " + std::to_string(v) + " not in forest");
  return index_[v];
}

auto InducedForest::contains(int v) const -> bool {
  return v >= 0 && v < static_cast<int>(index_.size()) && index_[v] != -1;
}

auto InducedForest::degree(int v) const -> int { return local_.degree(local(v)); }

auto InducedForest::neighbors(int v) const -> std::vector<int> {
  std::vector<int> out;
  for (int w : local_.neighbors(local(v))) out.push_back(vertices_[w]);
  return out;
}

auto InducedForest::is_tree() const -> bool {
  return !vertices_.empty() && local_.is_connected();
}

auto InducedForest::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  for (auto [u, v] : local_.edges()) out.emplace_back(vertices_[u], vertices_[v]);
  return out;
}

auto InducedForest::distance(int u, int v) const -> int {
  return local_.distances_from(local(u))[local(v)];
}

auto InducedForest::children(int root, int v) const -> std::vector<int> {
  auto dist = local_.distances_from(local(root));
  int lv = local(v);
  if (dist[lv] == -1) fail(ErrorCode::NotConnected, "vertex not connected to root");
  std::vector<int> out;
  for (int w : local_.neighbors(lv))
    if (dist[w] == dist[lv] + 1) out.push_back(vertices_[w]);
  return out;
}

auto InducedForest::rooted_subtree(int root, int v) const -> std::vector<int> {
  auto dist = local_.distances_from(local(root));
  int lv = local(v);
  if (dist[lv] == -1) fail(ErrorCode::NotConnected, "vertex not connected to root");
  std::vector<int> out;
  std::vector<int> stack{lv};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(vertices_[u]);
    for (int w : local_.neighbors(u))
      if (dist[w] == dist[u] + 1) stack.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

auto induced_forest(const LabeledTree& tree, const TreeProfile& p, const std::vector<int>& I) -> InducedForest {
  std::vector<bool> member(tree.vertex_count(), false);
  for (int v : I) {
    if (v < 0 || v >= tree.vertex_count() || !p.in_A[v])
      fail(ErrorCode::InvalidSubset, "vertex " + std::to_string(v) + " is not in A");
    member[v] = true;
  }
  std::vector<int> verts;
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (member[v]) {
      verts.push_back(v);
      continue;
    }
    if (p.in_A[v]) continue;
    int hits = 0;
    for (int w : tree.neighbors(v)) hits += member[w] ? 1 : 0;
    if (hits >= 2) verts.push_back(v);
  }
  return InducedForest(tree, verts);
}

auto second_neighbors_in_A(const LabeledTree& tree, const TreeProfile& p, int v) -> std::vector<int> {
  std::vector<int> out;
  for (int x : tree.neighbors(v))
    for (int w : tree.neighbors(x))
      if (w != v && p.in_A[w]) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

auto Decomposition::a(int v) const -> int {
  auto it = A_sets.find(v);
  if (it == A_sets.end()) fail(ErrorCode::VertexAbsent, "vertex " + std::to_string(v) + " not in J'");
  return static_cast<int>(it->second.size());
}

auto Decomposition::in_Jprime(int v) const -> bool { return A_sets.count(v) != 0; }

auto decompose(const LabeledTree& tree, const TreeProfile& p) -> Decomposition {
  const int m = tree.vertex_count();
  Decomposition d;
  std::vector<bool> in_set(m, false);

  for (int v : p.A)
    if (p.excess[v] > 0) {
      d.J.push_back(v);
      in_set[v] = true;
    }

  // A-vertices interior to an A-A path of length at least four: two distinct
  // neighbours that each reach another A-vertex.
  for (int v : p.A) {
    if (in_set[v]) continue;
    int branching = 0;
    for (int x : tree.neighbors(v))
      if (tree.degree(x) >= 2) ++branching;
    if (branching >= 2) in_set[v] = true;
  }
  for (int v : p.A)
    if (in_set[v]) d.J1.push_back(v);

  // Conflicts among A \ J1 are cliques around a shared neighbour; keep the
  // highest label of each clique and move the rest into J2.
  for (int x : p.B) {
    std::vector<int> clique;
    for (int w : tree.neighbors(x))
      if (!in_set[w]) clique.push_back(w);
    if (clique.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < clique.size(); ++i) in_set[clique[i]] = true;
  }
  for (int v : p.A)
    if (in_set[v]) d.J2.push_back(v);

  // A vertex outside the set with two set members at distance two stays in
  // violation however the set grows, so every violator is forced and the
  // closure below is the unique minimum superset.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> violators;
    for (int v : p.A) {
      if (in_set[v]) continue;
      int hits = 0;
      for (int w : second_neighbors_in_A(tree, p, v)) hits += in_set[w] ? 1 : 0;
      if (hits >= 2) violators.push_back(v);
    }
    for (int v : violators) in_set[v] = true;
    changed = !violators.empty();
  }
  for (int v : p.A)
    if (in_set[v]) d.Jprime.push_back(v);

  for (int v : d.Jprime) {
    auto& bucket = d.A_sets[v];
    for (int w : second_neighbors_in_A(tree, p, v))
      if (!in_set[w]) bucket.push_back(w);
  }
  d.forest = induced_forest(tree, p, d.Jprime);
  return d;
}

}  // namespace spextree
