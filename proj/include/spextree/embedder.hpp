#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spextree/decomposition.hpp"
#include "spextree/graph.hpp"
#include "spextree/hypothesis.hpp"
#include "spextree/tree.hpp"

namespace spextree {

// part1 occupies host vertices 0..|part1|-1, part2 follows.
struct JoinHost {
  Graph part1;
  Graph part2;
  bool star_structure = false;  // part1 empty graph, part2 disjoint stars
  int star_order = 0;

  auto graph() const -> Graph { return join(part1, part2); }
  auto offset() const -> int { return part1.vertex_count(); }
  auto vertex_count() const -> int { return part1.vertex_count() + part2.vertex_count(); }
};

auto make_join_host(Graph part1, Graph part2) -> JoinHost;
// Empty graph on l vertices joined with `copies` stars of `order` vertices.
auto make_star_host(int l, int copies, int order) -> JoinHost;

enum class EmbeddingMethod { HighDegreeJoin, StarHost, Backtracking };

auto to_string(EmbeddingMethod method) -> std::string;

struct EmbeddingMap {
  EmbeddingMethod method = EmbeddingMethod::Backtracking;
  std::vector<int> map;  // tree vertex -> host vertex
  bool verified = false;
};

auto verify_embedding(const LabeledTree& tree, const Graph& host, const std::vector<int>& map) -> bool;

// Requires |part1| == l, n >= m and max degree of part2 at least delta.
// Throws PreconditionFailed.
auto embed_highdeg_join(const LabeledTree& tree, const TreeProfile& p, const JoinHost& host) -> EmbeddingMap;

struct CountingStep {
  int p = 0;
  long long neighbours_needed = 0;  // p(delta-1)+1
  long long fit_in_part2 = 0;       // p(delta-2)+1
};

struct NonembeddingCertificate {
  int delta = 0;
  int l = 0;
  int part2_max_degree = 0;
  int part2_degree_delta_minus_one = 0;
  std::vector<CountingStep> steps;
};

struct NonembeddingVerdict {
  bool certified = false;  // false means ConditionsNotMet
  std::string reason;
  NonembeddingCertificate certificate;
};

// Requires |part1| == l. Throws PreconditionFailed.
auto certify_nonembeddable(const LabeledTree& tree, const TreeProfile& p, const JoinHost& host) -> NonembeddingVerdict;

// Embeds into the empty graph on l vertices joined with m stars of delta
// vertices. Throws InvalidCertificate, PreconditionFailed (delta < 2),
// InternalVerificationFailed.
auto embed_star_host(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d,
                     const HypothesisCertificate& cert) -> EmbeddingMap;

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

auto to_string(SearchStatus status) -> std::string;

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<EmbeddingMap> embedding;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

auto find_embedding_exact(const LabeledTree& tree, const Graph& host,
                          std::uint64_t budget = kDefaultSearchBudget) -> SearchOutcome;

}  // namespace spextree
