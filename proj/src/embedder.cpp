#include "spextree/embedder.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "spextree/error.hpp"

namespace spextree {

auto make_join_host(Graph part1, Graph part2) -> JoinHost {
  JoinHost h;
  h.part1 = std::move(part1);
  h.part2 = std::move(part2);
  return h;
}

auto make_star_host(int l, int copies, int order) -> JoinHost {
  JoinHost h;
  h.part1 = empty_graph(l);
  h.part2 = disjoint_stars(copies, order);
  h.star_structure = true;
  h.star_order = order;
  return h;
}

auto to_string(EmbeddingMethod method) -> std::string {
  switch (method) {
    case EmbeddingMethod::HighDegreeJoin: return "constructive_highdeg";
    case EmbeddingMethod::StarHost: return "constructive_star_host";
    case EmbeddingMethod::Backtracking: return "backtracking";
  }
  return "unknown";
}

auto to_string(SearchStatus status) -> std::string {
  switch (status) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "unknown";
}

auto verify_embedding(const LabeledTree& tree, const Graph& host, const std::vector<int>& map) -> bool {
  if (static_cast<int>(map.size()) != tree.vertex_count()) return false;
  std::vector<bool> used(host.vertex_count(), false);
  for (int x : map) {
    if (x < 0 || x >= host.vertex_count() || used[x]) return false;
    used[x] = true;
  }
  for (auto [u, v] : tree.edges())
    if (!host.has_edge(map[u], map[v])) return false;
  return true;
}

auto embed_highdeg_join(const LabeledTree& tree, const TreeProfile& p, const JoinHost& host) -> EmbeddingMap {
  const int m = tree.vertex_count();
  if (host.part1.vertex_count() != p.l)
    fail(ErrorCode::PreconditionFailed, "first part must have exactly l vertices");
  if (host.vertex_count() < m) fail(ErrorCode::PreconditionFailed, "host has fewer than m vertices");
  const Graph& h2 = host.part2;
  int star = -1;
  for (int x = 0; x < h2.vertex_count() && star == -1; ++x)
    if (h2.degree(x) >= p.delta) star = x;
  if (star == -1) fail(ErrorCode::PreconditionFailed, "second part has maximum degree below delta");

  int v = -1;
  for (int a : p.A)
    if (tree.degree(a) == p.delta) {
      v = a;
      break;
    }
  const int off = host.offset();
  std::vector<int> map(m, -1);
  std::vector<bool> used2(h2.vertex_count(), false);
  map[v] = off + star;
  used2[star] = true;
  const auto& nv = tree.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    int x = h2.neighbors(star)[i];
    map[nv[i]] = off + x;
    used2[x] = true;
  }
  int next2 = 0;
  for (int b : p.B) {
    if (map[b] != -1) continue;
    while (used2[next2]) ++next2;
    map[b] = off + next2;
    used2[next2] = true;
  }
  int next1 = 0;
  for (int a : p.A)
    if (a != v) map[a] = next1++;

  EmbeddingMap out{EmbeddingMethod::HighDegreeJoin, std::move(map), false};
  out.verified = verify_embedding(tree, host.graph(), out.map);
  if (!out.verified) fail(ErrorCode::InternalVerificationFailed, "high-degree embedding failed verification");
  return out;
}

auto certify_nonembeddable(const LabeledTree& tree, const TreeProfile& p, const JoinHost& host) -> NonembeddingVerdict {
  (void)tree;
  if (host.part1.vertex_count() != p.l)
    fail(ErrorCode::PreconditionFailed, "first part must have exactly l vertices");
  NonembeddingVerdict out;
  auto& c = out.certificate;
  c.delta = p.delta;
  c.l = p.l;
  c.part2_max_degree = host.part2.max_degree();
  for (int x = 0; x < host.part2.vertex_count(); ++x)
    if (host.part2.degree(x) == p.delta - 1) ++c.part2_degree_delta_minus_one;
  if (c.part2_max_degree > p.delta - 1) {
    out.reason = "second part has a vertex of degree at least delta";
    return out;
  }
  if (c.part2_degree_delta_minus_one > 1) {
    out.reason = "second part has more than one vertex of degree delta-1";
    return out;
  }
  for (int k = 1; k <= p.l + 1; ++k)
    c.steps.push_back({k, static_cast<long long>(k) * (p.delta - 1) + 1, static_cast<long long>(k) * (p.delta - 2) + 1});
  out.certified = true;
  return out;
}

namespace {

// Allocation state for the star host: part1 is 0..l-1, star c has centre
// l + c*order and leaves following it.
class StarPlacer {
 public:
  StarPlacer(int m, int l, int copies, int order) : l_(l), copies_(copies), order_(order), map_(m, -1) {}

  auto placed(int v) const -> bool { return map_[v] != -1; }

  void to_part1(int v) {
    if (next1_ >= l_) fail(ErrorCode::InternalVerificationFailed, "first part exhausted");
    map_[v] = next1_++;
  }

  auto to_new_centre(int v) -> int {
    if (next_star_ >= copies_) fail(ErrorCode::InternalVerificationFailed, "stars exhausted");
    int s = next_star_++;
    map_[v] = centre(s);
    return s;
  }

  void to_leaves(int s, const std::vector<int>& verts) {
    if (static_cast<int>(verts.size()) != order_ - 1)
      fail(ErrorCode::InternalVerificationFailed, "leaf count does not match star size");
    for (std::size_t i = 0; i < verts.size(); ++i) map_[verts[i]] = centre(s) + 1 + static_cast<int>(i);
  }

  // Unused stars are free in their entirety.
  void rest_to_free(const std::vector<int>& verts) {
    int next = centre(next_star_);
    const int end = l_ + copies_ * order_;
    for (int v : verts) {
      if (placed(v)) continue;
      if (next >= end) fail(ErrorCode::InternalVerificationFailed, "second part exhausted");
      map_[v] = next++;
    }
  }

  auto map() const -> const std::vector<int>& { return map_; }

 private:
  auto centre(int s) const -> int { return l_ + s * order_; }

  int l_;
  int copies_;
  int order_;
  std::vector<int> map_;
  int next1_ = 0;
  int next_star_ = 0;
};

auto common_neighbour(const LabeledTree& tree, int u, int v) -> int {
  for (int x : tree.neighbors(u))
    if (tree.has_edge(x, v)) return x;
  fail(ErrorCode::InternalVerificationFailed, "no common neighbour");
}

auto without(const std::vector<int>& from, const std::vector<int>& drop) -> std::vector<int> {
  std::vector<int> out;
  for (int x : from)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

}  // namespace

auto embed_star_host(const LabeledTree& tree, const TreeProfile& p, const Decomposition& d,
                     const HypothesisCertificate& cert) -> EmbeddingMap {
  HypothesisCertificate checked;
  try {
    checked = check_with(tree, p, d, cert.witness);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidCertificate, e.what());
  }
  if (!checked.valid) fail(ErrorCode::InvalidCertificate, "certificate does not satisfy the hypothesis: " + checked.failure);
  // With delta = 1 the stars are single vertices and the host is K_{l,m},
  // which cannot hold a tree whose classes both exceed l.
  if (p.delta < 2) fail(ErrorCode::PreconditionFailed, "the star host needs delta >= 2");

  const int m = tree.vertex_count();
  const int delta = p.delta;
  StarPlacer place(m, p.l, m, delta);

  if (checked.witness.size() == 1) {
    int v = checked.witness.front();
    const auto& av = d.A_sets.at(v);
    std::vector<int> chosen(av.begin(), av.begin() + (p.excess[v] + 1));
    int sv = place.to_new_centre(v);
    std::vector<int> stars;
    for (int a : chosen) stars.push_back(place.to_new_centre(a));
    std::vector<int> commons;
    for (int a : chosen) commons.push_back(common_neighbour(tree, v, a));
    for (int x : commons) place.to_part1(x);
    place.to_leaves(sv, without(tree.neighbors(v), commons));
    for (std::size_t i = 0; i < chosen.size(); ++i)
      place.to_leaves(stars[i], without(tree.neighbors(chosen[i]), {commons[i]}));
    for (int a : p.A)
      if (!place.placed(a)) place.to_part1(a);
    place.rest_to_free(p.B);
  } else {
    auto refined = refine(tree, p, d, checked.witness);
    const auto& core = refined.vertices;
    int root = core.front();
    auto forest = induced_forest(tree, p, core);
    std::vector<int> order = core;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return forest.distance(root, x) < forest.distance(root, y);
    });
    std::vector<int> star_of(m, -1);
    for (int v : order) star_of[v] = place.to_new_centre(v);
    for (int v : order)
      for (int w : forest.children(root, v)) place.to_part1(w);
    std::vector<std::vector<int>> commons(m);
    for (int v : order)
      for (int a : d.A_sets.at(v)) {
        star_of[a] = place.to_new_centre(a);
        int x = common_neighbour(tree, v, a);
        commons[v].push_back(x);
        place.to_part1(x);
      }
    for (int v : order) {
      auto rest = without(without(tree.neighbors(v), forest.neighbors(v)), commons[v]);
      // Neighbours with no other A-neighbour are safe in the independent part.
      std::stable_sort(rest.begin(), rest.end(), [&](int x, int y) {
        return (tree.degree(x) == 1) > (tree.degree(y) == 1);
      });
      int into_part1 = p.excess[v] + 1 - forest.degree(v) - d.a(v);
      if (into_part1 < 0 || into_part1 > static_cast<int>(rest.size()))
        fail(ErrorCode::InternalVerificationFailed, "refined witness violates the degree budget");
      for (int i = 0; i < into_part1; ++i) place.to_part1(rest[i]);
      place.to_leaves(star_of[v], std::vector<int>(rest.begin() + into_part1, rest.end()));
    }
    for (int a : p.A)
      if (!place.placed(a)) place.to_part1(a);
    for (int v : order)
      for (std::size_t i = 0; i < d.A_sets.at(v).size(); ++i) {
        int a = d.A_sets.at(v)[i];
        place.to_leaves(star_of[a], without(tree.neighbors(a), {commons[v][i]}));
      }
    place.rest_to_free(p.B);
  }

  auto host = make_star_host(p.l, m, delta).graph();
  EmbeddingMap out{EmbeddingMethod::StarHost, place.map(), false};
  out.verified = verify_embedding(tree, host, out.map);
  if (!out.verified) fail(ErrorCode::InternalVerificationFailed, "star-host embedding failed verification");
  return out;
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const LabeledTree& tree, const Graph& host, std::uint64_t budget)
      : tree_(tree), host_(host), budget_(budget), n_(host.vertex_count()), words_((n_ + 63) / 64) {
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int x = 0; x < n_; ++x)
      for (int y : host.neighbors(x)) adj_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
    used_.assign(words_, 0);

    rank_.resize(n_);
    by_rank_.resize(n_);
    std::iota(by_rank_.begin(), by_rank_.end(), 0);
    std::stable_sort(by_rank_.begin(), by_rank_.end(), [&](int x, int y) { return host.degree(x) < host.degree(y); });
    for (int i = 0; i < n_; ++i) rank_[by_rank_[i]] = i;
    sorted_nbrs_.resize(n_);
    for (int x = 0; x < n_; ++x) {
      sorted_nbrs_[x] = host.neighbors(x);
      std::sort(sorted_nbrs_[x].begin(), sorted_nbrs_[x].end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
    }

    // x and y are twins when swapping them is an automorphism.
    twin_.resize(n_);
    for (int x = 0; x < n_; ++x) {
      twin_[x] = x;
      for (int y = 0; y < x; ++y)
        if (twin_[y] == y && twins(x, y)) {
          twin_[x] = y;
          break;
        }
    }

    const int m = tree.vertex_count();
    order_.reserve(m);
    parent_.assign(m, -1);
    std::vector<bool> placed(m, false);
    int first = 0;
    for (int v = 0; v < m; ++v)
      if (tree.degree(v) > tree.degree(first)) first = v;
    order_.push_back(first);
    placed[first] = true;
    while (static_cast<int>(order_.size()) < m) {
      int best = -1;
      int best_parent = -1;
      for (int u : order_)
        for (int w : tree.neighbors(u))
          if (!placed[w] && (best == -1 || tree.degree(w) > tree.degree(best) ||
                             (tree.degree(w) == tree.degree(best) && w < best))) {
            best = w;
            best_parent = u;
          }
      order_.push_back(best);
      parent_[best] = best_parent;
      placed[best] = true;
    }
    map_.assign(m, -1);
    colour_ = host.bipartition();
    if (colour_) {
      auto tc = *tree.graph().bipartition();
      tree_side_ = tc;
      side_count_[0] = static_cast<int>(std::count(tc.begin(), tc.end(), 0));
      side_count_[1] = m - side_count_[0];
      host_comp_ = host.components();
    }
  }

  auto run() -> SearchOutcome {
    SearchOutcome out;
    if (tree_.vertex_count() > n_) {
      out.status = SearchStatus::Exhausted;
      return out;
    }
    bool found = false;
    try {
      found = extend(0);
    } catch (const BudgetHit&) {
      out.status = SearchStatus::BudgetExceeded;
      out.nodes = nodes_;
      return out;
    }
    out.nodes = nodes_;
    if (found) {
      out.status = SearchStatus::Found;
      out.embedding = EmbeddingMap{EmbeddingMethod::Backtracking, map_, verify_embedding(tree_, host_, map_)};
    }
    return out;
  }

 private:
  struct BudgetHit {};

  auto row(int x) const -> const std::uint64_t* { return &adj_[x * words_]; }

  auto twins(int x, int y) const -> bool {
    const auto* rx = row(x);
    const auto* ry = row(y);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t a = rx[w];
      std::uint64_t b = ry[w];
      if (w == x / 64) a |= std::uint64_t{1} << (x % 64);
      if (w == y / 64) a |= std::uint64_t{1} << (y % 64);
      if (w == x / 64) b |= std::uint64_t{1} << (x % 64);
      if (w == y / 64) b |= std::uint64_t{1} << (y % 64);
      if (a != b) return false;
    }
    return true;
  }

  auto is_used(int x) const -> bool { return (used_[x / 64] >> (x % 64)) & 1; }
  void flip(int x) { used_[x / 64] ^= std::uint64_t{1} << (x % 64); }

  auto free_neighbours(int x) const -> int {
    int count = 0;
    const auto* rx = row(x);
    for (int w = 0; w < words_; ++w) count += std::popcount(rx[w] & ~used_[w]);
    return count;
  }

  auto root_ok(int x) const -> bool {
    if (!colour_) return true;
    // Colour classes of the root's component must absorb both tree sides.
    int same[2] = {0, 0};
    for (int y = 0; y < n_; ++y)
      if (host_comp_[y] == host_comp_[x]) ++same[(*colour_)[y] == (*colour_)[x] ? 0 : 1];
    int root_side = tree_side_[order_[0]];
    return side_count_[root_side] <= same[0] && side_count_[1 - root_side] <= same[1];
  }

  auto try_place(int depth, int v, int x) -> bool {
    if (++nodes_ > budget_) throw BudgetHit{};
    int need = tree_.degree(v) - (depth == 0 ? 0 : 1);
    map_[v] = x;
    flip(x);
    bool ok = free_neighbours(x) >= need && extend(depth + 1);
    if (!ok) {
      flip(x);
      map_[v] = -1;
    }
    return ok;
  }

  auto extend(int depth) -> bool {
    if (depth == static_cast<int>(order_.size())) return true;
    int v = order_[depth];
    int deg = tree_.degree(v);
    std::vector<int> tried;
    const std::vector<int>& pool = depth == 0 ? by_rank_ : sorted_nbrs_[map_[parent_[v]]];
    for (int x : pool) {
      if (is_used(x) || host_.degree(x) < deg) continue;
      if (std::find(tried.begin(), tried.end(), twin_[x]) != tried.end()) continue;
      tried.push_back(twin_[x]);
      if (depth == 0 && !root_ok(x)) continue;
      if (try_place(depth, v, x)) return true;
    }
    return false;
  }

  const LabeledTree& tree_;
  const Graph& host_;
  std::uint64_t budget_;
  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> used_;
  std::vector<int> rank_;
  std::vector<int> by_rank_;
  std::vector<std::vector<int>> sorted_nbrs_;
  std::vector<int> twin_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> map_;
  std::optional<std::vector<int>> colour_;
  std::vector<int> tree_side_;
  int side_count_[2] = {0, 0};
  std::vector<int> host_comp_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

auto find_embedding_exact(const LabeledTree& tree, const Graph& host, std::uint64_t budget) -> SearchOutcome {
  return ExactSearch(tree, host, budget).run();
}

}  // namespace spextree
