#include "spextree/tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "spextree/error.hpp"

namespace spextree {

namespace {

void check_tree(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorCode::NotATree, "empty vertex set");
  if (g.edge_count() != g.vertex_count() - 1)
    fail(ErrorCode::NotATree, std::to_string(g.edge_count()) + " edges on " + std::to_string(g.vertex_count()) + " vertices");
  if (!g.is_connected()) fail(ErrorCode::NotATree, "graph is disconnected");
}

auto build_graph(int n, const std::vector<Edge>& edges) -> Graph {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorCode::BadLabel, "label out of range");
    if (u == v || g.has_edge(u, v)) fail(ErrorCode::NotATree, "loop or repeated edge");
    g.add_edge(u, v);
  }
  return g;
}

auto parse_int(std::string_view token, int line_no) -> long long {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + std::string(token) + "'");
  return value;
}

}  // namespace

LabeledTree::LabeledTree(int vertex_count, const std::vector<Edge>& edges)
    : graph_(build_graph(vertex_count, edges)) {
  check_tree(graph_);
}

LabeledTree::LabeledTree(Graph graph) : graph_(std::move(graph)) { check_tree(graph_); }

auto parse_tree(std::string_view text) -> LabeledTree {
  std::vector<std::pair<long long, long long>> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.size() != 2)
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two labels");
    raw.emplace_back(parse_int(tokens[0], line_no), parse_int(tokens[1], line_no));
  }
  if (raw.empty()) fail(ErrorCode::ParseError, "no edges");
  std::set<long long> labels;
  for (auto [u, v] : raw) {
    if (u < 0 || v < 0) fail(ErrorCode::BadLabel, "negative label");
    labels.insert(u);
    labels.insert(v);
  }
  long long top = *labels.rbegin();
  if (static_cast<long long>(labels.size()) != top + 1)
    fail(ErrorCode::BadLabel, "labels are not contiguous from 0");
  std::vector<Edge> edges;
  for (auto [u, v] : raw) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return LabeledTree(static_cast<int>(top + 1), edges);
}

auto read_tree_file(const std::string& path) -> LabeledTree {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tree(buf.str());
}

auto format_edge_list(const Graph& g, std::string_view header) -> std::string {
  std::ostringstream out;
  if (!header.empty()) out << header << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

auto profile(const LabeledTree& tree) -> TreeProfile {
  int m = tree.vertex_count();
  if (m < 2) fail(ErrorCode::DomainError, "profile needs at least two vertices");
  auto colour = *tree.graph().bipartition();
  int count0 = static_cast<int>(std::count(colour.begin(), colour.end(), 0));
  int count1 = m - count0;
  // vertex 0 always has colour 0
  int side_a = count0 <= count1 ? 0 : 1;
  TreeProfile p;
  p.m = m;
  p.in_A.assign(m, false);
  p.excess.assign(m, 0);
  for (int v = 0; v < m; ++v) {
    if (colour[v] == side_a) {
      p.A.push_back(v);
      p.in_A[v] = true;
    } else {
      p.B.push_back(v);
    }
  }
  p.l = static_cast<int>(p.A.size()) - 1;
  p.delta = tree.degree(p.A.front());
  for (int v : p.A) p.delta = std::min(p.delta, tree.degree(v));
  for (int v : p.A) p.excess[v] = tree.degree(v) - p.delta;
  p.t = m - 1 - (p.l + 1) * p.delta;
  return p;
}

auto family_feasible(int m, int l, int delta) -> bool {
  if (l < 0 || delta < 1 || m < 1) return false;
  if (l == 0) return m == delta + 1;
  return m >= std::max(2 * l + 2, (l + 1) * delta + 1);
}

auto relabel(const LabeledTree& tree, const std::vector<int>& perm) -> LabeledTree {
  std::vector<Edge> edges;
  for (auto [u, v] : tree.edges()) edges.emplace_back(perm[u], perm[v]);
  return LabeledTree(tree.vertex_count(), edges);
}

}  // namespace spextree
