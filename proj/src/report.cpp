#include "spextree/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace spextree {

auto number(double value) -> Json {
  if (!std::isfinite(value)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  double rounded = std::strtod(buf, nullptr);
  if (rounded == std::floor(rounded) && std::abs(rounded) < 1e15) return static_cast<long long>(rounded);
  return rounded;
}

auto to_json(const TreeProfile& p) -> Json {
  Json excess = Json::object();
  for (int v : p.A) excess[std::to_string(v)] = p.excess[v];
  return Json{{"m", p.m}, {"l", p.l}, {"delta", p.delta}, {"t", p.t}, {"A", p.A}, {"B", p.B}, {"excess", excess}};
}

auto to_json(const Decomposition& d) -> Json {
  Json ai = Json::object();
  for (const auto& [v, set] : d.A_sets) ai[std::to_string(v)] = set;
  Json forest = Json::array();
  for (auto [u, v] : d.forest.edges()) forest.push_back({u, v});
  return Json{{"J", d.J},   {"J1", d.J1}, {"J2", d.J2}, {"Jprime", d.Jprime}, {"Ai", ai},
              {"greedy_fallback", d.greedy_fallback}, {"forest_edges", forest}};
}

auto to_json(const HypothesisCertificate& c) -> Json {
  Json per = Json::array();
  for (const auto& pv : c.per_vertex) per.push_back({{"v", pv.v}, {"a", pv.a}, {"t", pv.t}});
  Json out{{"witness", c.witness}, {"lhs", c.lhs},           {"rhs", c.rhs},
           {"tree_check", c.tree_check}, {"per_vertex", per}, {"refined", c.refined},
           {"valid", c.valid}};
  if (!c.valid) out["failure"] = c.failure;
  return out;
}

auto to_json(const WitnessSearch& s) -> Json {
  const char* status = s.status == WitnessStatus::Found       ? "Found"
                       : s.status == WitnessStatus::NoWitness ? "NoWitness"
                                                              : "SearchCapExceeded";
  Json out{{"status", status}};
  out["certificate"] = s.certificate ? to_json(*s.certificate) : Json(nullptr);
  return out;
}

auto to_json(const EmbeddingMap& e) -> Json {
  Json map = Json::object();
  for (std::size_t v = 0; v < e.map.size(); ++v) map[std::to_string(v)] = e.map[v];
  return Json{{"method", to_string(e.method)}, {"map", map}, {"verified", e.verified}};
}

auto to_json(const NonembeddingVerdict& v) -> Json {
  Json out{{"certified", v.certified}};
  if (!v.certified) {
    out["reason"] = v.reason;
    return out;
  }
  const auto& c = v.certificate;
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"p", s.p}, {"neighbours_needed", s.neighbours_needed}, {"fit_in_part2", s.fit_in_part2}});
  out["delta"] = c.delta;
  out["l"] = c.l;
  out["part2_max_degree"] = c.part2_max_degree;
  out["part2_degree_delta_minus_one"] = c.part2_degree_delta_minus_one;
  out["steps"] = steps;
  return out;
}

auto to_json(const SearchOutcome& s) -> Json {
  Json out{{"status", to_string(s.status)}, {"nodes", s.nodes}};
  out["embedding"] = s.embedding ? to_json(*s.embedding) : Json(nullptr);
  return out;
}

auto to_json(const BoundsReport& b) -> Json {
  Json out{{"lower", number(b.lower)},
           {"upper", number(b.upper)},
           {"regime", b.regime == Regime::Plain ? "plain" : "embeddable"}};
  out["c"] = b.c ? number(*b.c) : Json(nullptr);
  out["f_params"] = Json{{"l", b.l}, {"delta", b.delta}, {"n", number(b.n)}};
  return out;
}

auto to_json(const Graph& g) -> Json {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

auto to_json(const SpexReport& r) -> Json {
  Json extremal = Json::array();
  for (const auto& sg : r.extremal) extremal.push_back(to_json(sg.to_graph()));
  Json out{{"n", r.n}, {"lambda_max", number(r.lambda_max)}, {"extremal", extremal}};
  out["candidate_lambda"] = r.candidate_lambda ? number(*r.candidate_lambda) : Json(nullptr);
  out["agrees"] = r.agrees;
  out["graphs_examined"] = r.graphs_examined;
  out["t_free"] = r.t_free;
  return out;
}

auto to_json(const ThresholdReport& r) -> Json {
  Json terms = Json::array();
  Json logs = Json::array();
  for (int i = 0; i < 5; ++i) {
    terms.push_back(number(r.terms[i]));
    logs.push_back(number(r.log10_terms[i]));
  }
  return Json{{"valid", r.valid},       {"violations", r.violations}, {"terms", terms},
              {"log10_terms", logs},    {"N", number(r.N)},           {"log10_N", number(r.log10_N)},
              {"overflow", r.overflow}};
}

auto error_json(const Error& e) -> Json {
  return Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

auto format_graph(const Graph& g) -> std::string {
  return format_edge_list(g, "# graph n=" + std::to_string(g.vertex_count()));
}

auto parse_graph(std::string_view text) -> Graph {
  std::istringstream in{std::string(text)};
  std::string line;
  int declared = -1;
  int line_no = 0;
  std::vector<Edge> edges;
  int top = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto pos = line.find("graph n=");
      if (pos != std::string::npos) {
        try {
          declared = std::stoi(line.substr(pos + 8));
        } catch (const std::exception&) {
          fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad graph header");
        }
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two labels");
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) fail(ErrorCode::BadLabel, "label out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    top = std::max(top, static_cast<int>(std::max(u, v)));
  }
  int n = declared >= 0 ? declared : top + 1;
  if (top >= n) fail(ErrorCode::BadLabel, "label exceeds declared vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v || g.has_edge(u, v)) fail(ErrorCode::ParseError, "loop or repeated edge");
    g.add_edge(u, v);
  }
  return g;
}

auto read_graph_file(const std::string& path) -> Graph {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace spextree
