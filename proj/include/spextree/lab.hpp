#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spextree/embedder.hpp"
#include "spextree/graph.hpp"
#include "spextree/tree.hpp"

namespace spextree {

// One tree per isomorphism class, 1 <= m <= 12. Throws OutOfRange.
void for_each_free_tree(int m, const std::function<void(const LabeledTree&)>& visit);
auto enumerate_trees(int m) -> std::vector<LabeledTree>;

inline constexpr int kSmallGraphMax = 12;

struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kSmallGraphMax> rows{};

  auto has_edge(int u, int v) const -> bool { return (rows[u] >> v) & 1U; }
  void add_edge(int u, int v);
  auto degree(int v) const -> int;
  auto to_graph() const -> Graph;
  static auto from_graph(const Graph& g) -> SmallGraph;

  friend auto operator==(const SmallGraph&, const SmallGraph&) -> bool = default;
  friend auto operator<(const SmallGraph& a, const SmallGraph& b) -> bool {
    return a.n != b.n ? a.n < b.n : a.rows < b.rows;
  }
};

// Relabelled copy that is identical for all graphs in an isomorphism class.
auto canonical_form(const SmallGraph& g) -> SmallGraph;

// All graphs on n <= 10 vertices up to isomorphism, optionally with maximum
// degree at most max_degree, as canonical forms in increasing order.
// Throws TooLarge.
auto enumerate_graphs(int n, int max_degree = -1) -> std::vector<SmallGraph>;

enum class CandidateMode { Lower, StarHost };

struct Candidate {
  CandidateMode mode = CandidateMode::Lower;
  JoinHost host;
  Graph graph;
  // Set for the lower mode: the structural T-freeness certificate.
  std::optional<NonembeddingVerdict> verdict;
};

// Lower: K_l joined with a (delta-2)-regular or almost-regular circulant on
// n - l vertices (a clique when n - l < delta - 1). StarHost: the empty graph
// on l vertices joined with m stars of delta vertices; n is ignored.
// Throws DeltaTooSmall, DomainError.
auto build_candidate(const LabeledTree& tree, const TreeProfile& p, int n, CandidateMode mode) -> Candidate;

enum class FreenessVerdict { TFree, ContainsT, Unknown };

struct FreenessResult {
  FreenessVerdict verdict = FreenessVerdict::Unknown;
  std::optional<EmbeddingMap> embedding;
  std::uint64_t nodes = 0;
};

inline constexpr int kCertifyMaxVertices = 24;

// Throws TooLarge beyond kCertifyMaxVertices host vertices.
auto certify_T_free(const Graph& g, const LabeledTree& tree, std::uint64_t budget = kDefaultSearchBudget)
    -> FreenessResult;

struct SpexReport {
  int n = 0;
  double lambda_max = 0.0;
  std::vector<SmallGraph> extremal;
  std::optional<double> candidate_lambda;
  bool agrees = false;
  int graphs_examined = 0;
  int t_free = 0;
};

inline constexpr int kBruteForceMax = 8;
inline constexpr double kExtremalTolerance = 1e-9;

// Throws TooLarge for n > 8.
auto brute_force_spex(int n, const LabeledTree& tree) -> SpexReport;

// k vertex-disjoint copies of K_{1,d} as subgraphs.
auto contains_disjoint_stars(const Graph& g, int k, int d) -> bool;

}  // namespace spextree
