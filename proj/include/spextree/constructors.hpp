#pragma once

#include <cstdint>
#include <vector>

#include "spextree/tree.hpp"

namespace spextree {

// Each of the l+1 A-vertices gets delta-1 private leaves, one hub joins all
// of A, and the surplus leaves hang off A-vertex 0. A is labelled 0..l.
// Throws InfeasibleFamily.
auto canonical_member(int m, int l, int delta) -> LabeledTree;

struct CaterpillarSpec {
  std::vector<int> leaves;  // leaves per spine vertex, spine is a path
};

auto caterpillar(const CaterpillarSpec& spec) -> LabeledTree;

// Attaches `pendants` new leaves to every leaf of the caterpillar that lies
// in its smaller colour class. Throws SpecInvalid.
auto lobster_from_caterpillar(const CaterpillarSpec& spec, int pendants) -> LabeledTree;

// Joins a B-vertex of T1 (chosen from a hypothesis witness of T1) to the
// lowest-labelled A-vertex of T2; T2 is relabelled after T1.
// Throws HypothesisMissing, DeltaMismatch, DeltaIsOne.
auto combine(const LabeledTree& t1, const LabeledTree& t2) -> LabeledTree;

// A member of the family with a witness, hence embeddable into the star host.
// Throws InfeasibleFamily, UnsupportedParameters, NoEmbeddableMember.
auto embeddable_member(int m, int l, int delta) -> LabeledTree;

// Random member with excess t < l: A is linked through hub vertices whose
// neighbourhoods pairwise share at most one vertex, then private leaves.
// Requires delta >= 2 and 0 <= t < l. Throws InvalidInputs.
auto random_t_lt_l_member(int l, int delta, int t, std::uint64_t seed) -> LabeledTree;

// Uniform random labelled tree via a Pruefer sequence.
auto random_labeled_tree(int m, std::uint64_t seed) -> LabeledTree;

}  // namespace spextree
