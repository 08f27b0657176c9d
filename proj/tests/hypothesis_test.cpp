#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "spextree/constructors.hpp"
#include "spextree/error.hpp"
#include "spextree/hypothesis.hpp"
#include "spextree/lab.hpp"

using namespace spextree;

namespace {

struct Fixture {
  LabeledTree tree;
  TreeProfile p;
  Decomposition d;
  explicit Fixture(LabeledTree t) : tree(std::move(t)), p(profile(tree)), d(decompose(tree, p)) {}
};

// a_v recomputed from scratch: A-vertices outside J' two steps from v.
auto count_a(const Fixture& f, int v) -> int {
  std::set<int> jp(f.d.Jprime.begin(), f.d.Jprime.end());
  auto dist = f.tree.graph().distances_from(v);
  int a = 0;
  for (int w : f.p.A)
    if (dist[w] == 2 && !jp.count(w)) ++a;
  return a;
}

// degree of v inside T^I: neighbours that touch another member of I
auto forest_degree(const Fixture& f, const std::vector<int>& I, int v) -> int {
  int deg = 0;
  for (int x : f.tree.neighbors(v))
    for (int w : f.tree.neighbors(x))
      if (w != v && std::find(I.begin(), I.end(), w) != I.end()) {
        ++deg;
        break;
      }
  return deg;
}

auto postcondition_holds(const Fixture& f, const std::vector<int>& I) -> bool {
  for (int v : I)
    if (count_a(f, v) > f.p.excess[v] + 1 - forest_degree(f, I, v)) return false;
  return true;
}

// All nonempty subsets of J' passing check_with.
auto valid_witnesses(const Fixture& f) -> std::vector<std::vector<int>> {
  std::vector<std::vector<int>> out;
  const auto& jp = f.d.Jprime;
  for (unsigned mask = 1; mask < (1U << jp.size()); ++mask) {
    std::vector<int> I;
    for (std::size_t i = 0; i < jp.size(); ++i)
      if ((mask >> i) & 1U) I.push_back(jp[i]);
    if (check_with(f.tree, f.p, f.d, I).valid) out.push_back(I);
  }
  return out;
}

}  // namespace

TEST(CheckWith, PathOnSeven) {
  Fixture f(LabeledTree(path_graph(7)));
  auto c = check_with(f.tree, f.p, f.d, {3});
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.lhs, 2);
  EXPECT_EQ(c.rhs, 1);
  EXPECT_TRUE(c.tree_check);
  ASSERT_EQ(c.per_vertex.size(), 1U);
  EXPECT_EQ(c.per_vertex[0].a, 2);
  EXPECT_EQ(c.per_vertex[0].t, 0);
}

TEST(CheckWith, Errors) {
  Fixture star(LabeledTree(star_graph(4)));
  try {
    check_with(star.tree, star.p, star.d, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyWitness);
  }
  Fixture path(LabeledTree(path_graph(7)));
  try {
    check_with(path.tree, path.p, path.d, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSubsetOfJprime);
  }
}

TEST(CheckWith, ValidityMatchesDefinition) {
  for (int m = 4; m <= 11; ++m)
    for (const auto& tree : enumerate_trees(m)) {
      Fixture f(tree);
      const auto& jp = f.d.Jprime;
      for (unsigned mask = 1; mask < (1U << jp.size()); ++mask) {
        std::vector<int> I;
        for (std::size_t i = 0; i < jp.size(); ++i)
          if ((mask >> i) & 1U) I.push_back(jp[i]);
        auto c = check_with(f.tree, f.p, f.d, I);
        int lhs = 0;
        int rhs = 2;
        bool within = true;
        for (int v : I) {
          lhs += count_a(f, v);
          rhs += f.p.excess[v] - 1;
          within = within && count_a(f, v) <= f.p.excess[v];
        }
        ASSERT_EQ(c.lhs, lhs);
        ASSERT_EQ(c.rhs, rhs);
        bool expect = c.tree_check && lhs >= rhs && (I.size() == 1 || (within && c.neighbourhood_check));
        ASSERT_EQ(c.valid, expect);
      }
    }
}

TEST(FindWitness, PathAndStar) {
  Fixture path(LabeledTree(path_graph(7)));
  auto w = find_witness(path.tree, path.p, path.d);
  ASSERT_EQ(w.status, WitnessStatus::Found);
  EXPECT_EQ(w.certificate->witness, (std::vector<int>{3}));

  Fixture star(LabeledTree(star_graph(5)));
  EXPECT_EQ(find_witness(star.tree, star.p, star.d).status, WitnessStatus::NoWitness);
}

TEST(FindWitness, ExcessBelowLAlwaysSucceeds) {
  int checked = 0;
  for (int m = 2; m <= 12; ++m)
    for (const auto& tree : enumerate_trees(m)) {
      Fixture f(tree);
      auto w = find_witness(f.tree, f.p, f.d);
      if (f.p.t < f.p.l) {
        ++checked;
        ASSERT_EQ(w.status, WitnessStatus::Found) << format_edge_list(tree.graph());
        // either a singleton with a_v > t_v, or J' itself
        bool singleton = false;
        for (int v : f.d.Jprime) singleton = singleton || count_a(f, v) > f.p.excess[v];
        EXPECT_TRUE(singleton || check_with(f.tree, f.p, f.d, f.d.Jprime).valid);
      }
      // the search is complete: no witness means no valid subset at all
      if (w.status == WitnessStatus::NoWitness) ASSERT_TRUE(valid_witnesses(f).empty());
      if (w.status == WitnessStatus::Found) ASSERT_TRUE(w.certificate->valid);
    }
  EXPECT_EQ(checked, 65);
}

TEST(Refine, AlreadyFineIsUntouched) {
  // two centres, each with one collision-free A-neighbour pair
  Fixture f(canonical_member(10, 2, 3));
  auto w = find_witness(f.tree, f.p, f.d);
  ASSERT_EQ(w.status, WitnessStatus::Found);
  for (const auto& I : valid_witnesses(f)) {
    if (I.size() < 2 || !postcondition_holds(f, I)) continue;
    auto r = refine(f.tree, f.p, f.d, I);
    EXPECT_EQ(r.vertices, I);
    EXPECT_EQ(r.iterations, 0);
  }
}

TEST(Refine, RejectsNonWitness) {
  Fixture f(LabeledTree(path_graph(7)));
  try {
    refine(f.tree, f.p, f.d, {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidWitness);
  }
}

TEST(Refine, PostconditionOnAllSmallTrees) {
  int runs = 0;
  int shrunk = 0;
  for (int m = 4; m <= 12; ++m)
    for (const auto& tree : enumerate_trees(m)) {
      Fixture f(tree);
      for (const auto& I : valid_witnesses(f)) {
        if (I.size() < 2) continue;
        auto r = refine(f.tree, f.p, f.d, I);
        ++runs;
        ASSERT_TRUE(std::includes(I.begin(), I.end(), r.vertices.begin(), r.vertices.end()));
        ASSERT_FALSE(r.vertices.empty());
        ASSERT_LE(r.iterations, f.p.l + 1);
        ASSERT_TRUE(check_with(f.tree, f.p, f.d, r.vertices).valid);
        ASSERT_TRUE(postcondition_holds(f, r.vertices));
        if (r.vertices != I) ++shrunk;
      }
    }
  EXPECT_GT(runs, 0);
  EXPECT_GT(shrunk, 0);
}

// Large excess-below-l member in the size class of the worked refinement
// example: the refinement of J' must end with four vertices.
TEST(Refine, LargeInstanceEndsWithFourVertices) {
  Fixture f(random_t_lt_l_member(37, 4, 32, 21));
  ASSERT_EQ(f.p.m, 185);
  ASSERT_EQ(f.p.l, 37);
  ASSERT_EQ(f.p.delta, 4);
  ASSERT_EQ(f.p.t, 32);
  ASSERT_TRUE(check_with(f.tree, f.p, f.d, f.d.Jprime).valid);
  EXPECT_FALSE(postcondition_holds(f, f.d.Jprime));
  auto r = refine(f.tree, f.p, f.d, f.d.Jprime);
  EXPECT_EQ(r.vertices.size(), 4U);
  EXPECT_GE(r.iterations, 1);
  EXPECT_LE(r.iterations, f.p.l + 1);
  EXPECT_TRUE(check_with(f.tree, f.p, f.d, r.vertices).valid);
  EXPECT_TRUE(postcondition_holds(f, r.vertices));
}
