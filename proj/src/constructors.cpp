#include "spextree/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "spextree/decomposition.hpp"
#include "spextree/error.hpp"
#include "spextree/hypothesis.hpp"

namespace spextree {

namespace {

auto params(int m, int l, int delta) -> std::string {
  return "(m=" + std::to_string(m) + ", l=" + std::to_string(l) + ", delta=" + std::to_string(delta) + ")";
}

auto has_witness(const LabeledTree& tree) -> bool {
  if (tree.vertex_count() < 2) return false;
  auto p = profile(tree);
  auto d = decompose(tree, p);
  return find_witness(tree, p, d).status == WitnessStatus::Found;
}

// B-vertex of t1 to attach the second tree to.
auto attachment_point(const LabeledTree& t1, const TreeProfile& p, const Decomposition& d) -> int {
  for (int u : d.Jprime)
    for (int w : t1.neighbors(u))
      if (t1.degree(w) == 1) return w;
  std::vector<int> heavy_leaves;
  for (int u : d.Jprime)
    if (d.forest.degree(u) == 1 && d.a(u) > p.excess[u]) heavy_leaves.push_back(u);
  if (heavy_leaves.size() >= 2) {
    int u = heavy_leaves.front();
    auto inside = d.forest.neighbors(u);
    for (int w : t1.neighbors(u))
      if (std::find(inside.begin(), inside.end(), w) == inside.end()) return w;
  }
  if (d.Jprime.size() == 1) {
    int u = d.Jprime.front();
    if (d.a(u) - 1 > p.excess[u]) return t1.neighbors(u).front();
  }
  return -1;
}

auto combine_impl(const LabeledTree& t1, const LabeledTree& t2, bool allow_heavier_second) -> LabeledTree {
  if (t1.vertex_count() < 2 || t2.vertex_count() < 2) fail(ErrorCode::HypothesisMissing, "trees must have at least two vertices");
  auto p1 = profile(t1);
  auto p2 = profile(t2);
  if (p1.delta == 1) fail(ErrorCode::DeltaIsOne, "first tree has delta = 1");
  if (p2.delta != p1.delta && !(allow_heavier_second && p2.delta > p1.delta))
    fail(ErrorCode::DeltaMismatch, "delta " + std::to_string(p1.delta) + " vs " + std::to_string(p2.delta));
  auto d1 = decompose(t1, p1);
  if (find_witness(t1, p1, d1).status != WitnessStatus::Found)
    fail(ErrorCode::HypothesisMissing, "first tree has no hypothesis witness");
  int w = attachment_point(t1, p1, d1);
  if (w == -1) fail(ErrorCode::HypothesisMissing, "no attachment vertex preserves the witness");

  const int m1 = t1.vertex_count();
  auto edges = t1.edges();
  for (auto [u, v] : t2.edges()) edges.emplace_back(u + m1, v + m1);
  edges.emplace_back(w, p2.A.front() + m1);
  LabeledTree out(m1 + t2.vertex_count(), edges);

  auto p = profile(out);
  if (p.l != p1.l + p2.l + 1 || p.delta != p1.delta || !has_witness(out))
    fail(ErrorCode::InternalVerificationFailed, "combined tree lost its profile or witness");
  return out;
}

}  // namespace

auto canonical_member(int m, int l, int delta) -> LabeledTree {
  if (!family_feasible(m, l, delta)) fail(ErrorCode::InfeasibleFamily, "empty family " + params(m, l, delta));
  std::vector<Edge> edges;
  if (l == 0) {
    for (int v = 1; v <= delta; ++v) edges.emplace_back(0, v);
    return LabeledTree(m, edges);
  }
  int hub = l + 1;
  int next = l + 2;
  for (int a = 0; a <= l; ++a) {
    edges.emplace_back(a, hub);
    for (int k = 0; k < delta - 1; ++k) edges.emplace_back(a, next++);
  }
  while (next < m) edges.emplace_back(0, next++);
  return LabeledTree(m, edges);
}

auto caterpillar(const CaterpillarSpec& spec) -> LabeledTree {
  const int k = static_cast<int>(spec.leaves.size());
  if (k == 0) fail(ErrorCode::SpecInvalid, "empty spine");
  for (int d : spec.leaves)
    if (d < 0) fail(ErrorCode::SpecInvalid, "negative leaf count");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  int next = k;
  for (int v = 0; v < k; ++v)
    for (int j = 0; j < spec.leaves[v]; ++j) edges.emplace_back(v, next++);
  return LabeledTree(next, edges);
}

auto lobster_from_caterpillar(const CaterpillarSpec& spec, int pendants) -> LabeledTree {
  if (pendants < 0) fail(ErrorCode::SpecInvalid, "negative pendant count");
  auto base = caterpillar(spec);
  if (base.vertex_count() == 1) {
    std::vector<Edge> edges;
    for (int v = 1; v <= pendants; ++v) edges.emplace_back(0, v);
    return LabeledTree(pendants + 1, edges);
  }
  auto p = profile(base);
  auto edges = base.edges();
  int next = base.vertex_count();
  for (int a : p.A)
    if (base.degree(a) == 1)
      for (int j = 0; j < pendants; ++j) edges.emplace_back(a, next++);
  return LabeledTree(next, edges);
}

auto combine(const LabeledTree& t1, const LabeledTree& t2) -> LabeledTree { return combine_impl(t1, t2, false); }

auto embeddable_member(int m, int l, int delta) -> LabeledTree {
  if (!family_feasible(m, l, delta)) fail(ErrorCode::InfeasibleFamily, "empty family " + params(m, l, delta));
  if (l == 0 || delta == 1) fail(ErrorCode::UnsupportedParameters, "needs l >= 1 and delta >= 2 " + params(m, l, delta));
  if (m < (l + 1) * (delta + 1)) return canonical_member(m, l, delta);
  if (l == 1)
    // With two A-vertices, the one placed in a star sees at most delta
    // neighbours and cannot use the single first-part vertex, so both have
    // degree delta and t = 0 < l is forced.
    fail(ErrorCode::NoEmbeddableMember, "no member with t >= l embeds when l = 1 " + params(m, l, delta));
  const int m1 = 2 * delta + 1;
  auto t1 = canonical_member(m1, 1, delta);
  const int m2 = m - m1;
  const int l2 = l - 2;
  if (l2 == 0) {
    // The only l = 0 members are stars with delta+1 vertices; a larger star
    // keeps A's minimum degree at least delta.
    std::vector<Edge> edges;
    for (int v = 1; v < m2; ++v) edges.emplace_back(0, v);
    return combine_impl(t1, LabeledTree(m2, edges), true);
  }
  return combine_impl(t1, canonical_member(m2, l2, delta), false);
}

auto random_t_lt_l_member(int l, int delta, int t, std::uint64_t seed) -> LabeledTree {
  if (delta < 2 || l < 1 || t < 0 || t >= l)
    fail(ErrorCode::InvalidInputs, "needs delta >= 2 and 0 <= t < l");
  std::mt19937_64 rng(seed);
  const int na = l + 1;
  std::vector<Edge> hub_edges;
  std::vector<int> links(na, 0);
  int hubs = 0;
  for (int attempt = 0;; ++attempt) {
    hub_edges.clear();
    std::fill(links.begin(), links.end(), 0);
    hubs = attempt < 1000 ? std::uniform_int_distribution<int>(1, l)(rng) : 1;
    // split l into `hubs` positive parts; hub j joins parts[j]+1 components
    std::vector<int> cuts(l - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(hubs - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(l);
    std::vector<std::vector<int>> comps(na);
    for (int a = 0; a < na; ++a) comps[a] = {a};
    for (int j = 0; j < hubs; ++j) {
      int joins = cuts[j + 1] - cuts[j] + 1;
      std::shuffle(comps.begin(), comps.end(), rng);
      std::vector<int> merged;
      for (int c = 0; c < joins; ++c) {
        auto& comp = comps[c];
        int a = comp[std::uniform_int_distribution<std::size_t>(0, comp.size() - 1)(rng)];
        hub_edges.emplace_back(a, na + j);
        ++links[a];
        merged.insert(merged.end(), comp.begin(), comp.end());
      }
      comps.erase(comps.begin(), comps.begin() + joins);
      comps.push_back(std::move(merged));
    }
    int base = 0;
    for (int a = 0; a < na; ++a) base += std::max(0, links[a] - delta);
    if (base <= t) break;
  }
  std::vector<int> leaves(na);
  int excess = 0;
  for (int a = 0; a < na; ++a) {
    leaves[a] = std::max(0, delta - links[a]);
    excess += std::max(0, links[a] - delta);
  }
  std::vector<int> at_delta;
  for (int a = 0; a < na; ++a)
    if (links[a] <= delta) at_delta.push_back(a);
  // keep one A-vertex at exactly delta so the minimum degree is delta
  int anchor = at_delta[std::uniform_int_distribution<std::size_t>(0, at_delta.size() - 1)(rng)];
  for (; excess < t; ++excess) {
    int a;
    do a = std::uniform_int_distribution<int>(0, na - 1)(rng);
    while (a == anchor);
    ++leaves[a];
  }
  auto edges = hub_edges;
  int next = na + hubs;
  for (int a = 0; a < na; ++a)
    for (int j = 0; j < leaves[a]; ++j) edges.emplace_back(a, next++);
  std::vector<int> perm(next);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(LabeledTree(next, edges), perm);
}

auto random_labeled_tree(int m, std::uint64_t seed) -> LabeledTree {
  if (m < 1) fail(ErrorCode::InvalidInputs, "tree needs a vertex");
  if (m == 1) return LabeledTree();
  if (m == 2) return LabeledTree(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> code(m - 2);
  for (int& c : code) c = std::uniform_int_distribution<int>(0, m - 1)(rng);
  std::vector<int> degree(m, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  int u = -1;
  for (int v = 0; v < m; ++v)
    if (degree[v] == 1) {
      if (u == -1) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  return LabeledTree(m, edges);
}

}  // namespace spextree
