#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "spextree/decomposition.hpp"
#include "spextree/error.hpp"
#include "spextree/lab.hpp"

using namespace spextree;

namespace {

// A = 0..11 with delta = 3, l = 11, m = 41. Vertex 0 carries the excess;
// 0-1-2-3-4 is a chain of A-vertices, 5 and 6 hang off one B-vertex shared
// with 0, and the rest are single attachments.
auto twelve_hub_tree() -> LabeledTree {
  std::vector<Edge> edges;
  int next = 12;
  auto connect = [&](std::vector<int> as) {
    int x = next++;
    for (int a : as) edges.emplace_back(a, x);
  };
  connect({0, 1});
  connect({1, 2});
  connect({2, 3});
  connect({3, 4});
  connect({0, 5, 6});
  connect({0, 7});
  connect({1, 8});
  connect({2, 9});
  connect({3, 10});
  connect({0, 11});
  std::map<int, int> leaves{{0, 3}, {4, 2}, {5, 2}, {6, 2}, {7, 2}, {8, 2}, {9, 2}, {10, 2}, {11, 2}};
  for (auto [a, k] : leaves)
    for (int i = 0; i < k; ++i) edges.emplace_back(a, next++);
  return LabeledTree(next, edges);
}

// Members of A outside S with two or more members of S at distance two.
auto violates(const LabeledTree& tree, const TreeProfile& p, const std::set<int>& S) -> bool {
  for (int v : p.A) {
    if (S.count(v)) continue;
    int hits = 0;
    for (int w : second_neighbors_in_A(tree, p, v)) hits += S.count(w) ? 1 : 0;
    if (hits >= 2) return true;
  }
  return false;
}

auto shares_neighbour(const LabeledTree& tree, int u, int v) -> bool {
  for (int x : tree.neighbors(u))
    if (tree.has_edge(x, v)) return true;
  return false;
}

}  // namespace

TEST(Decompose, PathOnSeven) {
  LabeledTree t(path_graph(7));
  auto p = profile(t);
  auto d = decompose(t, p);
  EXPECT_TRUE(d.J.empty());
  EXPECT_EQ(d.J1, (std::vector<int>{3}));
  EXPECT_EQ(d.J2, (std::vector<int>{3}));
  EXPECT_EQ(d.Jprime, (std::vector<int>{3}));
  EXPECT_EQ(d.A_sets.at(3), (std::vector<int>{1, 5}));
  EXPECT_EQ(d.a(3), 2);
  EXPECT_FALSE(d.greedy_fallback);
}

TEST(Decompose, StarHasEmptySets) {
  LabeledTree t(star_graph(4));
  auto d = decompose(t, profile(t));
  EXPECT_TRUE(d.J.empty());
  EXPECT_TRUE(d.J1.empty());
  EXPECT_TRUE(d.J2.empty());
  EXPECT_TRUE(d.Jprime.empty());
}

TEST(Decompose, TwelveHubTree) {
  auto t = twelve_hub_tree();
  auto p = profile(t);
  ASSERT_EQ(p.m, 41);
  ASSERT_EQ(p.l, 11);
  ASSERT_EQ(p.delta, 3);
  ASSERT_EQ(p.t, 4);
  auto d = decompose(t, p);
  EXPECT_EQ(d.J, (std::vector<int>{0}));
  EXPECT_EQ(d.J1, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(d.J2, (std::vector<int>{0, 1, 2, 3, 5}));
  EXPECT_EQ(d.Jprime, (std::vector<int>{0, 1, 2, 3, 5, 6}));
  EXPECT_GT(d.Jprime.size(), d.J.size());
  // three path-interior vertices, then one conflict pick and one closure step
  EXPECT_EQ(d.J1.size() - d.J.size(), 3U);
  EXPECT_EQ(d.Jprime.size() - d.J1.size(), 2U);
  int total = 0;
  for (auto& [v, set] : d.A_sets) total += static_cast<int>(set.size());
  EXPECT_EQ(total, p.l + 1 - static_cast<int>(d.Jprime.size()));
}

// Three A-leaves around one B-vertex: the conflicts form a triangle, not a
// matching, and the closure ends up taking all of A.
TEST(Decompose, ConflictTriangle) {
  LabeledTree t(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
  auto p = profile(t);
  ASSERT_EQ(p.A, (std::vector<int>{1, 2, 3}));
  ASSERT_EQ(p.delta, 2);
  auto d = decompose(t, p);
  EXPECT_TRUE(d.J1.empty());
  EXPECT_EQ(d.J2, (std::vector<int>{1, 2}));
  EXPECT_EQ(d.Jprime, (std::vector<int>{1, 2, 3}));
}

TEST(InducedForest, PathExamples) {
  LabeledTree t(path_graph(7));
  auto p = profile(t);
  auto f = induced_forest(t, p, {1, 3});
  EXPECT_EQ(f.vertices(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(f.edge_count(), 2);
  EXPECT_TRUE(f.is_tree());

  auto single = induced_forest(t, p, {3});
  EXPECT_EQ(single.vertices(), (std::vector<int>{3}));
  EXPECT_EQ(single.edge_count(), 0);

  auto apart = induced_forest(t, p, {1, 5});
  EXPECT_EQ(apart.vertices(), (std::vector<int>{1, 5}));
  EXPECT_FALSE(apart.is_tree());
  EXPECT_EQ(apart.distance(1, 5), -1);

  try {
    induced_forest(t, p, {2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSubset);
  }
}

TEST(InducedForest, RootedSubtrees) {
  LabeledTree t(path_graph(7));
  auto p = profile(t);
  auto f = induced_forest(t, p, {1, 3, 5});
  EXPECT_EQ(f.rooted_subtree(1, 1), f.vertices());
  EXPECT_EQ(f.rooted_subtree(1, 5), (std::vector<int>{5}));
  EXPECT_EQ(f.rooted_subtree(1, 3), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(f.children(1, 2), (std::vector<int>{3}));

  auto apart = induced_forest(t, p, {1, 5});
  try {
    apart.rooted_subtree(1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConnected);
  }
  try {
    f.rooted_subtree(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexAbsent);
  }
}

TEST(DecomposeProperties, AllTreesUpToTwelve) {
  for (int m = 2; m <= 12; ++m)
    for (const auto& tree : enumerate_trees(m)) {
      auto p = profile(tree);
      auto d = decompose(tree, p);
      std::set<int> J(d.J.begin(), d.J.end()), J1(d.J1.begin(), d.J1.end());
      std::set<int> J2(d.J2.begin(), d.J2.end()), Jp(d.Jprime.begin(), d.Jprime.end());
      ASSERT_TRUE(std::includes(J1.begin(), J1.end(), J.begin(), J.end()));
      ASSERT_TRUE(std::includes(J2.begin(), J2.end(), J1.begin(), J1.end()));
      ASSERT_TRUE(std::includes(Jp.begin(), Jp.end(), J2.begin(), J2.end()));
      for (int v : d.Jprime) ASSERT_TRUE(p.in_A[v]);

      for (int v : p.A)
        if (p.excess[v] > 0) ASSERT_TRUE(J.count(v));

      // J1 against explicit path walking
      auto interior = oracle::interior_vertices(tree, p);
      std::set<int> expected_J1 = J;
      expected_J1.insert(interior.begin(), interior.end());
      ASSERT_EQ(J1, expected_J1);

      // conflicts among A \ J1 are disjoint cliques
      std::vector<int> rest;
      for (int v : p.A)
        if (!J1.count(v)) rest.push_back(v);
      for (int u : rest)
        for (int v : rest)
          for (int w : rest) {
            if (u == v || v == w || u == w) continue;
            if (shares_neighbour(tree, u, v) && shares_neighbour(tree, v, w)) {
              ASSERT_TRUE(shares_neighbour(tree, u, w));
            }
          }

      // no two vertices outside J2 share a neighbour, and J2 is smallest:
      // each clique of size k costs exactly k-1
      for (int u : p.A)
        for (int v : p.A)
          if (u < v && !J2.count(u) && !J2.count(v)) ASSERT_FALSE(shares_neighbour(tree, u, v));

      // A_i partition A \ J'
      std::multiset<int> covered;
      for (auto& [v, set] : d.A_sets) {
        ASSERT_TRUE(Jp.count(v));
        covered.insert(set.begin(), set.end());
        int deg = d.forest.degree(v);
        ASSERT_LE(static_cast<int>(set.size()) + deg, p.excess[v] + p.delta);
      }
      std::multiset<int> outside;
      for (int v : p.A)
        if (!Jp.count(v)) outside.insert(v);
      if (!d.Jprime.empty()) ASSERT_EQ(covered, outside) << m;

      ASSERT_FALSE(violates(tree, p, Jp));
    }
}

// The closure must coincide with the smallest valid superset of J2.
TEST(DecomposeProperties, JprimeIsMinimumByExhaustion) {
  for (int m = 2; m <= 11; ++m)
    for (const auto& tree : enumerate_trees(m)) {
      auto p = profile(tree);
      auto d = decompose(tree, p);
      std::vector<int> free;
      for (int v : p.A)
        if (std::find(d.J2.begin(), d.J2.end(), v) == d.J2.end()) free.push_back(v);
      std::size_t best = p.A.size() + 1;
      std::vector<std::set<int>> winners;
      for (unsigned mask = 0; mask < (1U << free.size()); ++mask) {
        std::set<int> S(d.J2.begin(), d.J2.end());
        for (std::size_t i = 0; i < free.size(); ++i)
          if ((mask >> i) & 1U) S.insert(free[i]);
        if (violates(tree, p, S)) continue;
        if (S.size() < best) {
          best = S.size();
          winners.clear();
        }
        if (S.size() == best) winners.push_back(S);
      }
      ASSERT_EQ(winners.size(), 1U);
      ASSERT_EQ(winners[0], std::set<int>(d.Jprime.begin(), d.Jprime.end()));
    }
}

// Relabelling with an order-preserving map on A and B keeps the sets, so a
// shuffled copy of a tree only changes the labels.
TEST(DecomposeProperties, RelabelEquivariantUpToTieBreaks) {
  auto t = twelve_hub_tree();
  auto base = decompose(t, profile(t));
  std::vector<int> perm(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) perm[v] = v < 12 ? v : t.vertex_count() + 11 - v;
  auto moved = relabel(t, perm);
  auto d = decompose(moved, profile(moved));
  EXPECT_EQ(d.J, base.J);
  EXPECT_EQ(d.J1, base.J1);
  EXPECT_EQ(d.J2, base.J2);
  EXPECT_EQ(d.Jprime, base.Jprime);
}
