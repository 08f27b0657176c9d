#include "spextree/hypothesis.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "spextree/error.hpp"

namespace spextree {

auto check_with(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d, std::vector<int> I)
    -> HypothesisCertificate {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.empty()) fail(ErrorCode::EmptyWitness, "witness set is empty");
  for (int v : I)
    if (!d.in_Jprime(v)) fail(ErrorCode::NotSubsetOfJprime, "vertex " + std::to_string(v) + " is not in J'");

  HypothesisCertificate c;
  c.witness = I;
  auto forest = induced_forest(tree, p, I);
  c.tree_check = forest.is_tree();
  c.rhs = 2;
  for (int v : I) {
    int a = d.a(v);
    int t = p.excess[v];
    c.per_vertex.push_back({v, a, t});
    c.lhs += a;
    c.rhs += t - 1;
    if (a > t) c.a_within_excess = false;
  }
  if (I.size() > 1) {
    std::set<int> reach;
    for (int x : forest.vertices())
      if (!p.in_A[x])
        for (int w : tree.neighbors(x)) reach.insert(w);
    c.neighbourhood_check = std::equal(reach.begin(), reach.end(), I.begin(), I.end());
  } else {
    c.a_within_excess = true;
    c.neighbourhood_check = true;
  }

  if (!c.tree_check) {
    c.failure = "T^I is not a tree";
  } else if (c.lhs < c.rhs) {
    c.failure = "sum of a_i below 2 + sum of (t_i - 1)";
  } else if (!c.a_within_excess) {
    c.failure = "some a_i exceeds t_i";
  } else if (!c.neighbourhood_check) {
    c.failure = "middle vertices reach A outside I";
  } else {
    c.valid = true;
  }
  return c;
}

auto find_witness(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d) -> WitnessSearch {
  WitnessSearch out;
  const auto& jp = d.Jprime;
  if (jp.empty()) return out;

  for (int v : jp)
    if (d.a(v) > p.excess[v]) {
      out.status = WitnessStatus::Found;
      out.certificate = check_with(tree, p, d, {v});
      return out;
    }

  if (auto whole = check_with(tree, p, d, jp); whole.valid) {
    out.status = WitnessStatus::Found;
    out.certificate = std::move(whole);
    return out;
  }

  const int n = static_cast<int>(jp.size());
  if (n > kWitnessSearchCap) {
    out.status = WitnessStatus::SearchCapExceeded;
    return out;
  }
  for (int k = 2; k < n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<int> subset;
      for (int i : idx) subset.push_back(jp[i]);
      if (auto c = check_with(tree, p, d, subset); c.valid) {
        out.status = WitnessStatus::Found;
        out.certificate = std::move(c);
        return out;
      }
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

namespace {

auto members_in(const std::vector<int>& verts, const TreeProfile& p) -> std::vector<int> {
  std::vector<int> out;
  for (int v : verts)
    if (p.in_A[v]) out.push_back(v);
  return out;
}

void erase_all(std::vector<int>& from, const std::vector<int>& gone) {
  std::erase_if(from, [&](int v) { return std::binary_search(gone.begin(), gone.end(), v); });
}

}  // namespace

auto refine(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d, const std::vector<int>& I)
    -> RefineResult {
  if (I.size() < 2) fail(ErrorCode::InvalidWitness, "refinement needs a witness with at least two vertices");
  auto cert = check_with(tree, p, d, I);
  if (!cert.valid) fail(ErrorCode::InvalidWitness, "not a witness: " + cert.failure);

  RefineResult res;
  std::vector<int> current = cert.witness;
  int root = current.front();
  auto fine = [&](const InducedForest& f, int v) { return d.a(v) <= p.excess[v] + 1 - f.degree(v); };

  while (true) {
    auto forest = induced_forest(tree, p, current);
    int u = -1;
    int far = -1;
    for (int v : current) {
      if (fine(forest, v)) continue;
      int dist = forest.distance(root, v);
      if (dist > far) {
        far = dist;
        u = v;
      }
    }
    if (u == -1) break;
    if (++res.iterations > p.l + 1)
      fail(ErrorCode::InternalVerificationFailed, "refinement did not terminate within l+1 rounds");

    std::vector<int> dropped;
    for (int w : forest.children(root, u)) {
      auto below = members_in(forest.rooted_subtree(root, w), p);
      int sum_a = 0;
      int sum_t = 0;
      for (int v : below) {
        sum_a += d.a(v);
        sum_t += p.excess[v] - 1;
      }
      if (sum_a <= sum_t) dropped.insert(dropped.end(), below.begin(), below.end());
    }
    std::sort(dropped.begin(), dropped.end());
    erase_all(current, dropped);
    forest = induced_forest(tree, p, current);
    if (fine(forest, u)) continue;

    int keep = p.excess[u] + 1 - d.a(u);
    current = members_in(forest.rooted_subtree(root, u), p);
    root = u;
    forest = induced_forest(tree, p, current);
    auto kids = forest.children(root, u);
    std::vector<int> cut;
    for (int i = std::max(keep, 0); i < static_cast<int>(kids.size()); ++i) {
      auto below = members_in(forest.rooted_subtree(root, kids[i]), p);
      cut.insert(cut.end(), below.begin(), below.end());
    }
    std::sort(cut.begin(), cut.end());
    erase_all(current, cut);
  }
  res.vertices = current;
  return res;
}

}  // namespace spextree
