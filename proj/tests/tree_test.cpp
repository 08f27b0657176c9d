#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "spextree/error.hpp"
#include "spextree/lab.hpp"
#include "spextree/tree.hpp"

using namespace spextree;

namespace {

auto code_of(auto fn) -> ErrorCode {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::DomainError;
}

}  // namespace

TEST(ParseTree, ReadsPathWithComments) {
  auto t = parse_tree("# P7\n0 1\n1 2\n\n2 3\n3 4\n  # indented comment\n4 5\n5 6\n");
  EXPECT_EQ(t.vertex_count(), 7);
  EXPECT_EQ(t.edges().size(), 6U);
}

TEST(ParseTree, Errors) {
  EXPECT_EQ(code_of([] { parse_tree("0 1\n1 2\n2 0\n"); }), ErrorCode::NotATree);
  EXPECT_EQ(code_of([] { parse_tree("0 1\n2 3\n"); }), ErrorCode::NotATree);
  EXPECT_EQ(code_of([] { parse_tree("0 1\n1 3\n"); }), ErrorCode::BadLabel);
  EXPECT_EQ(code_of([] { parse_tree("0 -1\n"); }), ErrorCode::BadLabel);
  EXPECT_EQ(code_of([] { parse_tree("0 x\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_tree("0 1 2\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_tree("# nothing\n"); }), ErrorCode::ParseError);
}

TEST(ParseTree, RoundTripsEdgeList) {
  auto t = parse_tree("0 3\n3 1\n3 2\n2 4\n");
  auto again = parse_tree(format_edge_list(t.graph(), "# tree"));
  EXPECT_EQ(t, again);
}

TEST(Profile, PathOnSeven) {
  auto p = profile(LabeledTree(path_graph(7)));
  EXPECT_EQ(p.m, 7);
  EXPECT_EQ(p.l, 2);
  EXPECT_EQ(p.delta, 2);
  EXPECT_EQ(p.t, 0);
  EXPECT_EQ(p.A, (std::vector<int>{1, 3, 5}));
}

TEST(Profile, PathOnSixTiesToVertexZero) {
  auto p = profile(LabeledTree(path_graph(6)));
  EXPECT_EQ(p.l, 2);
  EXPECT_EQ(p.delta, 1);
  EXPECT_EQ(p.t, 2);
  EXPECT_EQ(p.A, (std::vector<int>{0, 2, 4}));
}

TEST(Profile, Star) {
  auto p = profile(LabeledTree(star_graph(4)));
  EXPECT_EQ(p.l, 0);
  EXPECT_EQ(p.delta, 4);
  EXPECT_EQ(p.t, 0);
}

TEST(Profile, SingleVertexRejected) {
  EXPECT_EQ(code_of([] { profile(LabeledTree()); }), ErrorCode::DomainError);
}

TEST(Profile, InvariantsOverAllSmallTrees) {
  for (int m = 2; m <= 12; ++m)
    for (const auto& tree : enumerate_trees(m)) {
      auto p = profile(tree);
      int sum = 0;
      for (int v : p.A) {
        ASSERT_GE(p.excess[v], 0);
        sum += p.excess[v];
      }
      ASSERT_EQ(sum, p.t);
      ASSERT_EQ(p.t, m - 1 - (p.l + 1) * p.delta);
      ASSERT_LE(p.A.size(), p.B.size());
      ASSERT_TRUE(family_feasible(m, p.l, p.delta)) << m << " " << p.l << " " << p.delta;
      for (auto [u, v] : tree.edges()) ASSERT_NE(p.in_A[u], p.in_A[v]);
    }
}

TEST(FamilyFeasible, Boundaries) {
  EXPECT_TRUE(family_feasible(7, 2, 2));
  EXPECT_FALSE(family_feasible(6, 2, 2));
  EXPECT_TRUE(family_feasible(5, 0, 4));
  EXPECT_FALSE(family_feasible(6, 0, 4));
  EXPECT_TRUE(family_feasible(6, 2, 1));
  EXPECT_FALSE(family_feasible(5, 2, 1));
}

// Every profile produced by enumeration is feasible, and every feasible
// triple with small m is realised by some tree.
TEST(FamilyFeasible, MatchesEnumeration) {
  for (int m = 2; m <= 11; ++m) {
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& tree : enumerate_trees(m)) {
      auto p = profile(tree);
      seen.insert({m, p.l, p.delta});
    }
    for (int l = 0; 2 * l + 2 <= m; ++l)
      for (int delta = 1; delta < m; ++delta)
        EXPECT_EQ(family_feasible(m, l, delta), seen.count({m, l, delta}) == 1) << m << " " << l << " " << delta;
  }
}
