#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spextree/decomposition.hpp"
#include "spextree/tree.hpp"

namespace spextree {

struct VertexCheck {
  int v = 0;
  int a = 0;
  int t = 0;
};

struct HypothesisCertificate {
  std::vector<int> witness;
  int lhs = 0;  // sum of a_i
  int rhs = 0;  // 2 + sum of (t_i - 1)
  bool tree_check = false;
  std::vector<VertexCheck> per_vertex;
  // Only evaluated when |I| > 1.
  bool a_within_excess = true;
  bool neighbourhood_check = true;
  std::vector<int> refined;
  bool valid = false;
  std::string failure;
};

enum class WitnessStatus { Found, NoWitness, SearchCapExceeded };

struct WitnessSearch {
  WitnessStatus status = WitnessStatus::NoWitness;
  std::optional<HypothesisCertificate> certificate;
};

inline constexpr int kWitnessSearchCap = 20;

// Throws EmptyWitness or NotSubsetOfJprime; an unsatisfied hypothesis is
// reported through valid/failure.
auto check_with(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d, std::vector<int> I)
    -> HypothesisCertificate;

auto find_witness(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d) -> WitnessSearch;

struct RefineResult {
  std::vector<int> vertices;
  int iterations = 0;
};

// Shrinks a witness with |I| > 1 until a_v <= t_v + 1 - deg_{T^{I'}}(v) holds
// on every remaining vertex. Throws InvalidWitness.
auto refine(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d, const std::vector<int>& I)
    -> RefineResult;

}  // namespace spextree
