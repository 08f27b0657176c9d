#include "spextree/lab.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "spextree/error.hpp"
#include "spextree/spectral.hpp"

namespace spextree {

namespace {

// Level sequences of free trees in the order of Wright, Richmond, Odlyzko
// and McKay (constant amortised time per tree).
using Layout = std::vector<int>;

auto next_rooted(const Layout& pred, int p) -> std::optional<Layout> {
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

auto next_rooted(const Layout& pred) -> std::optional<Layout> {
  int p = static_cast<int>(pred.size()) - 1;
  while (p > 0 && pred[p] == 1) --p;
  return next_rooted(pred, p);
}

auto split(const Layout& layout) -> std::pair<Layout, Layout> {
  std::size_t cut = layout.size();
  bool seen = false;
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout[i] == 1) {
      if (seen) {
        cut = i;
        break;
      }
      seen = true;
    }
  Layout left;
  for (std::size_t i = 1; i < cut; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = cut; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

auto next_free(const Layout& candidate) -> std::optional<Layout> {
  auto [left, rest] = split(candidate);
  int lh = *std::max_element(left.begin(), left.end());
  int rh = *std::max_element(rest.begin(), rest.end());
  bool valid = rh >= lh;
  if (valid && rh == lh) {
    if (left.size() > rest.size() || (left.size() == rest.size() && left > rest)) valid = false;
  }
  if (valid) return candidate;
  int p = static_cast<int>(left.size());
  auto next = next_rooted(candidate, p);
  if (next && candidate[p] > 2) {
    auto [nl, nr] = split(*next);
    int height = *std::max_element(nl.begin(), nl.end());
    for (int k = 0; k <= height; ++k) (*next)[next->size() - (height + 1) + k] = k + 1;
  }
  return next;
}

auto layout_tree(const Layout& layout) -> LabeledTree {
  std::vector<Edge> edges;
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
    while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
    if (!stack.empty()) edges.emplace_back(stack.back(), i);
    stack.push_back(i);
  }
  return LabeledTree(static_cast<int>(layout.size()), edges);
}

}  // namespace

void for_each_free_tree(int m, const std::function<void(const LabeledTree&)>& visit) {
  if (m < 1 || m > 12) fail(ErrorCode::OutOfRange, "tree enumeration supports 1 <= m <= 12");
  if (m == 1) {
    visit(LabeledTree());
    return;
  }
  Layout start;
  for (int i = 0; i <= m / 2; ++i) start.push_back(i);
  for (int i = 1; i < (m + 1) / 2; ++i) start.push_back(i);
  std::optional<Layout> layout = start;
  while (layout) {
    layout = next_free(*layout);
    if (!layout) break;
    visit(layout_tree(*layout));
    layout = next_rooted(*layout);
  }
}

auto enumerate_trees(int m) -> std::vector<LabeledTree> {
  std::vector<LabeledTree> out;
  for_each_free_tree(m, [&](const LabeledTree& t) { out.push_back(t); });
  return out;
}

void SmallGraph::add_edge(int u, int v) {
  rows[u] |= static_cast<std::uint16_t>(1U << v);
  rows[v] |= static_cast<std::uint16_t>(1U << u);
}

auto SmallGraph::degree(int v) const -> int { return std::popcount(static_cast<unsigned>(rows[v])); }

auto SmallGraph::to_graph() const -> Graph {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) g.add_edge(u, v);
  return g;
}

auto SmallGraph::from_graph(const Graph& g) -> SmallGraph {
  if (g.vertex_count() > kSmallGraphMax) fail(ErrorCode::TooLarge, "small graphs have at most 12 vertices");
  SmallGraph s;
  s.n = g.vertex_count();
  for (auto [u, v] : g.edges()) s.add_edge(u, v);
  return s;
}

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g) {}

  auto run() -> SmallGraph {
    Cells start(1);
    for (int v = 0; v < g_.n; ++v) start[0].push_back(v);
    search(std::move(start));
    return best_;
  }

 private:
  void refine(Cells& cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::uint16_t> masks;
      for (const auto& c : cells) {
        std::uint16_t mk = 0;
        for (int v : c) mk |= static_cast<std::uint16_t>(1U << v);
        masks.push_back(mk);
      }
      Cells next;
      for (const auto& c : cells) {
        if (c.size() == 1) {
          next.push_back(c);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> parts;
        for (int v : c) {
          std::vector<int> sig;
          for (auto mk : masks) sig.push_back(std::popcount(static_cast<unsigned>(g_.rows[v] & mk)));
          parts[sig].push_back(v);
        }
        if (parts.size() > 1) changed = true;
        for (auto& [sig, part] : parts) next.push_back(std::move(part));
      }
      cells = std::move(next);
    }
  }

  auto twins(int u, int v) const -> bool {
    auto mu = static_cast<std::uint16_t>(g_.rows[u] & ~(1U << v));
    auto mv = static_cast<std::uint16_t>(g_.rows[v] & ~(1U << u));
    return mu == mv;
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c.front());
    SmallGraph cert;
    cert.n = g_.n;
    for (int i = 0; i < g_.n; ++i)
      for (int j = 0; j < g_.n; ++j)
        if (g_.has_edge(order[i], order[j])) cert.rows[i] |= static_cast<std::uint16_t>(1U << j);
    if (!have_ || best_ < cert) {
      best_ = cert;
      have_ = true;
    }
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    // Swapping two twins in the same cell is an automorphism that fixes the
    // partition, so one representative per twin class suffices.
    std::vector<int> tried;
    for (int v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  const SmallGraph& g_;
  SmallGraph best_;
  bool have_ = false;
};

}  // namespace

auto canonical_form(const SmallGraph& g) -> SmallGraph {
  if (g.n == 0) return g;
  return Canonizer(g).run();
}

auto enumerate_graphs(int n, int max_degree) -> std::vector<SmallGraph> {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative order");
  if (n > 10) fail(ErrorCode::TooLarge, "graph enumeration supports n <= 10");
  static std::map<std::pair<int, int>, std::vector<SmallGraph>> cache;
  int cap = max_degree < 0 ? kSmallGraphMax : max_degree;
  auto key = std::make_pair(n, std::min(cap, std::max(n - 1, 0)));
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<SmallGraph> level{SmallGraph{}};
  if (n >= 1) level.front().n = 1;
  for (int k = 2; k <= n; ++k) {
    std::set<SmallGraph> found;
    for (const auto& g : level) {
      for (unsigned mask = 0; mask < (1U << (k - 1)); ++mask) {
        if (std::popcount(mask) > cap) continue;
        bool ok = true;
        for (int s = 0; s < k - 1 && ok; ++s)
          if ((mask >> s) & 1U) ok = g.degree(s) < cap;
        if (!ok) continue;
        SmallGraph h = g;
        h.n = k;
        for (int s = 0; s < k - 1; ++s)
          if ((mask >> s) & 1U) h.add_edge(s, k - 1);
        found.insert(canonical_form(h));
      }
    }
    level.assign(found.begin(), found.end());
  }
  cache[key] = level;
  return level;
}

auto build_candidate(const LabeledTree& tree, const TreeProfile& p, int n, CandidateMode mode) -> Candidate {
  Candidate c;
  c.mode = mode;
  if (mode == CandidateMode::StarHost) {
    c.host = make_star_host(p.l, tree.vertex_count(), p.delta);
    c.graph = c.host.graph();
    return c;
  }
  if (p.delta < 2) fail(ErrorCode::DeltaTooSmall, "lower candidate needs delta >= 2");
  if (n <= p.l) fail(ErrorCode::DomainError, "candidate needs n > l");
  int rest = n - p.l;
  Graph h2 = rest >= p.delta - 1 ? almost_regular_circulant(rest, p.delta - 2) : complete_graph(rest);
  c.host = make_join_host(complete_graph(p.l), std::move(h2));
  c.graph = c.host.graph();
  c.verdict = certify_nonembeddable(tree, p, c.host);
  return c;
}

auto certify_T_free(const Graph& g, const LabeledTree& tree, std::uint64_t budget) -> FreenessResult {
  if (g.vertex_count() > kCertifyMaxVertices)
    fail(ErrorCode::TooLarge, "exact certification supports at most 24 host vertices");
  auto outcome = find_embedding_exact(tree, g, budget);
  FreenessResult r;
  r.nodes = outcome.nodes;
  switch (outcome.status) {
    case SearchStatus::Found:
      r.verdict = FreenessVerdict::ContainsT;
      r.embedding = outcome.embedding;
      break;
    case SearchStatus::Exhausted: r.verdict = FreenessVerdict::TFree; break;
    case SearchStatus::BudgetExceeded: r.verdict = FreenessVerdict::Unknown; break;
  }
  return r;
}

auto brute_force_spex(int n, const LabeledTree& tree) -> SpexReport {
  if (n > kBruteForceMax) fail(ErrorCode::TooLarge, "brute force supports n <= 8");
  if (n < 1) fail(ErrorCode::OutOfRange, "n must be positive");
  SpexReport r;
  r.n = n;
  int tree_max_degree = tree.graph().max_degree();
  std::vector<std::pair<double, SmallGraph>> scored;
  for (const auto& sg : enumerate_graphs(n)) {
    ++r.graphs_examined;
    Graph g = sg.to_graph();
    bool free = g.edge_count() < tree.vertex_count() - 1 || g.max_degree() < tree_max_degree ||
                find_embedding_exact(tree, g, ~std::uint64_t{0}).status == SearchStatus::Exhausted;
    if (!free) continue;
    ++r.t_free;
    scored.emplace_back(spectral_radius(g).lambda, sg);
  }
  for (const auto& [lam, sg] : scored) r.lambda_max = std::max(r.lambda_max, lam);
  for (const auto& [lam, sg] : scored)
    if (lam >= r.lambda_max - kExtremalTolerance) r.extremal.push_back(sg);
  if (tree.vertex_count() >= 2) {
    auto p = profile(tree);
    if (p.delta >= 2 && n > p.l) {
      auto cand = build_candidate(tree, p, n, CandidateMode::Lower);
      r.candidate_lambda = spectral_radius(cand.graph).lambda;
      r.agrees = std::abs(*r.candidate_lambda - r.lambda_max) <= kExtremalTolerance;
    }
  }
  return r;
}

namespace {

auto stars_from(const Graph& g, int start, int k, int d, std::vector<bool>& used) -> bool {
  if (k == 0) return true;
  for (int c = start; c < g.vertex_count(); ++c) {
    if (used[c]) continue;
    std::vector<int> pool;
    for (int w : g.neighbors(c))
      if (!used[w]) pool.push_back(w);
    if (static_cast<int>(pool.size()) < d) continue;
    used[c] = true;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    const int n = static_cast<int>(pool.size());
    while (true) {
      for (int i : idx) used[pool[i]] = true;
      bool ok = stars_from(g, c + 1, k - 1, d, used);
      for (int i : idx) used[pool[i]] = false;
      if (ok) {
        used[c] = false;
        return true;
      }
      int pos = d - 1;
      while (pos >= 0 && idx[pos] == n - d + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    used[c] = false;
  }
  return false;
}

}  // namespace

auto contains_disjoint_stars(const Graph& g, int k, int d) -> bool {
  if (k < 0 || d < 0) fail(ErrorCode::InvalidInputs, "negative star parameters");
  std::vector<bool> used(g.vertex_count(), false);
  return stars_from(g, 0, k, d, used);
}

}  // namespace spextree
