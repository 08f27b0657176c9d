#include "spextree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "spextree/constructors.hpp"

namespace spextree {

namespace {

auto trim(std::string_view s) -> std::string {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

auto int_list(const std::string& text) -> std::vector<int> {
  std::vector<int> out;
  std::string spec = trim(text);
  if (spec.empty()) return out;
  try {
    if (auto dots = spec.find(".."); dots != std::string::npos) {
      int lo = std::stoi(spec.substr(0, dots));
      int hi = std::stoi(spec.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    std::stringstream in(spec);
    for (std::string tok; std::getline(in, tok, ',');) {
      std::size_t used = 0;
      std::string t = trim(tok);
      out.push_back(std::stoi(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    }
  } catch (const std::exception&) {
    fail(ErrorCode::ConfigError, "bad integer list '" + spec + "'");
  }
  return out;
}

auto real_list(const std::string& text) -> std::vector<double> {
  std::vector<double> out;
  std::string spec = trim(text);
  if (spec.empty()) return out;
  std::stringstream in(spec);
  try {
    for (std::string tok; std::getline(in, tok, ',');) {
      std::size_t used = 0;
      std::string t = trim(tok);
      out.push_back(std::stod(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    }
  } catch (const std::exception&) {
    fail(ErrorCode::ConfigError, "bad number list '" + spec + "'");
  }
  return out;
}

auto get(const Config& c, const std::string& key, const std::string& fallback) -> std::string {
  auto it = c.find(key);
  return it == c.end() ? fallback : it->second;
}

auto get_int(const Config& c, const std::string& key, int fallback) -> int {
  auto values = int_list(get(c, key, std::to_string(fallback)));
  if (values.size() != 1) fail(ErrorCode::ConfigError, "key '" + key + "' needs a single integer");
  return values.front();
}

void check_keys(const Config& c, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : c) {
    if (k == "campaign") continue;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      fail(ErrorCode::ConfigError, "unknown key '" + k + "' for this campaign");
  }
}

auto embedding_campaign(const Config& c) -> Json {
  check_keys(c, {"m_max"});
  int m_max = get_int(c, "m_max", 12);
  if (m_max > 12) fail(ErrorCode::ConfigError, "m_max is at most 12");
  long long trees = 0, t_lt_l = 0, embedded = 0, failures = 0, witnessed = 0;
  Json rows = Json::array();
  for (int m = 1; m <= m_max; ++m) {
    long long count = 0, small = 0, ok = 0, with_witness = 0;
    for_each_free_tree(m, [&](const LabeledTree& tree) {
      ++count;
      if (m < 2) return;
      auto p = profile(tree);
      auto d = decompose(tree, p);
      auto w = find_witness(tree, p, d);
      bool found = w.status == WitnessStatus::Found;
      if (found) ++with_witness;
      if (p.t >= p.l) return;
      ++small;
      try {
        if (found && embed_star_host(tree, p, d, *w.certificate).verified) ++ok;
      } catch (const Error&) {
      }
    });
    rows.push_back({{"m", m}, {"trees", count}, {"t_lt_l", small}, {"embedded", ok}, {"witnessed", with_witness}});
    trees += count;
    t_lt_l += small;
    embedded += ok;
    witnessed += with_witness;
    failures += small - ok;
  }
  return Json{{"rows", rows},
              {"summary",
               {{"trees", trees}, {"t_lt_l", t_lt_l}, {"embedded", embedded}, {"failures", failures},
                {"witnessed", witnessed}}}};
}

auto f_consistency_campaign(const Config& c) -> Json {
  check_keys(c, {"l", "d", "n", "tol"});
  auto ls = int_list(get(c, "l", "1..4"));
  auto ds = int_list(get(c, "d", "0..3"));
  auto ns = int_list(get(c, "n", "20,50,100"));
  double tol = real_list(get(c, "tol", "1e-10")).at(0);
  Json rows = Json::array();
  double worst = 0.0;
  for (int l : ls)
    for (int d : ds)
      for (int n : ns) {
        if (l < 1 || n <= l) fail(ErrorCode::ConfigError, "grid needs l >= 1 and n > l");
        auto h2 = regular_circulant(n - l, d);
        if (!h2) continue;
        auto spec = spectral_radius(join(complete_graph(l), *h2), tol);
        double f = f_value(l, d, n);
        double err = std::abs(spec.lambda - f);
        worst = std::max(worst, err);
        rows.push_back({{"l", l}, {"d", d}, {"n", n}, {"lambda", number(spec.lambda)}, {"f", number(f)},
                        {"error", number(err)}, {"converged", spec.converged}});
      }
  return Json{{"rows", rows}, {"summary", {{"cells", rows.size()}, {"max_error", number(worst)}}}};
}

auto gap_campaign(const Config& c) -> Json {
  check_keys(c, {"l", "delta", "n"});
  auto ls = int_list(get(c, "l", "1..4"));
  auto deltas = int_list(get(c, "delta", "2..5"));
  auto ns = real_list(get(c, "n", "1e2,1e3,1e4,1e5,1e6"));
  Json rows = Json::array();
  int violations = 0;
  for (int l : ls)
    for (int delta : deltas)
      for (double n : ns) {
        double g = gap(l, delta, n);
        double bound = (std::abs(2 * delta - 2 * l - 1) + 1) / (2 * std::sqrt(l * n));
        bool holds = std::abs(g - 0.5) <= bound;
        violations += holds ? 0 : 1;
        rows.push_back({{"l", l}, {"delta", delta}, {"n", number(n)}, {"gap", number(g)},
                        {"deviation", number(g - 0.5)}, {"bound", number(bound)}, {"holds", holds}});
      }
  return Json{{"rows", rows}, {"summary", {{"cells", rows.size()}, {"violations", violations}}}};
}

auto threshold_campaign(const Config& c) -> Json {
  check_keys(c, {"m"});
  auto ms = int_list(get(c, "m", "4..50"));
  Json rows = Json::array();
  int invalid = 0;
  for (int m : ms)
    for (int l = 1; 2 * l + 2 <= m; ++l) {
      double eta = 1.0 / (6 * m);
      double eps = 1.0 / (200 * std::pow(m, 4));
      double alpha = 1.0 / (400000 * std::pow(m, 9));
      auto r = constants_and_threshold(m, l, eta, eps, alpha);
      invalid += r.valid ? 0 : 1;
      rows.push_back({{"m", m}, {"l", l}, {"valid", r.valid}, {"log10_N", number(r.log10_N)}});
    }
  return Json{{"rows", rows}, {"summary", {{"cells", rows.size()}, {"invalid", invalid}}}};
}

auto nonembedding_campaign(const Config& c) -> Json {
  check_keys(c, {"m_max", "n_max", "budget"});
  int m_max = get_int(c, "m_max", 9);
  int n_max = get_int(c, "n_max", 14);
  auto budget = static_cast<std::uint64_t>(get_int(c, "budget", 100000000));
  if (m_max > 12) fail(ErrorCode::ConfigError, "m_max is at most 12");
  long long pairs = 0, t_free = 0, counterexamples = 0, unresolved = 0;
  for (int m = 2; m <= m_max; ++m)
    for_each_free_tree(m, [&](const LabeledTree& tree) {
      auto p = profile(tree);
      if (p.delta < 2) return;
      for (int n = m; n <= n_max; ++n) {
        auto cand = build_candidate(tree, p, n, CandidateMode::Lower);
        ++pairs;
        auto s = find_embedding_exact(tree, cand.graph, budget);
        if (s.status == SearchStatus::Exhausted) ++t_free;
        if (s.status == SearchStatus::Found) ++counterexamples;
        if (s.status == SearchStatus::BudgetExceeded) ++unresolved;
      }
    });
  return Json{{"rows", Json::array()},
              {"summary",
               {{"pairs", pairs}, {"t_free", t_free}, {"counterexamples", counterexamples}, {"unresolved", unresolved}}}};
}

auto highdeg_campaign(const Config& c) -> Json {
  check_keys(c, {"pairs", "seed", "m_max", "n_max"});
  int pairs = get_int(c, "pairs", 1000);
  auto seed = static_cast<std::uint64_t>(get_int(c, "seed", 1));
  int m_max = get_int(c, "m_max", 10);
  int n_max = get_int(c, "n_max", 20);
  std::mt19937_64 rng(seed);
  int verified = 0;
  for (int i = 0; i < pairs; ++i) {
    int m = std::uniform_int_distribution<int>(2, m_max)(rng);
    auto tree = random_labeled_tree(m, rng());
    auto p = profile(tree);
    int n = std::uniform_int_distribution<int>(m, std::max(m, n_max))(rng);
    int size2 = n - p.l;
    Graph h1(p.l);
    Graph h2(size2);
    // plant a vertex of degree delta, then sprinkle random edges
    for (int k = 1; k <= p.delta; ++k) h2.add_edge(0, k);
    for (int e = 0; e < size2; ++e) {
      int u = std::uniform_int_distribution<int>(0, size2 - 1)(rng);
      int v = std::uniform_int_distribution<int>(0, size2 - 1)(rng);
      if (u != v && !h2.has_edge(u, v)) h2.add_edge(u, v);
    }
    auto e = embed_highdeg_join(tree, p, make_join_host(h1, h2));
    verified += e.verified ? 1 : 0;
  }
  return Json{{"rows", Json::array()}, {"summary", {{"pairs", pairs}, {"verified", verified}}}};
}

}  // namespace

auto parse_config(std::string_view text) -> Config {
  Config out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(body.substr(0, eq));
    if (key.empty()) fail(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": empty key");
    if (out.count(key)) fail(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": duplicate key " + key);
    out[key] = trim(body.substr(eq + 1));
  }
  return out;
}

auto run_sweep(const Config& config) -> Json {
  auto it = config.find("campaign");
  if (it == config.end()) fail(ErrorCode::ConfigError, "missing campaign");
  const std::string& name = it->second;
  Json body;
  if (name == "embedding") body = embedding_campaign(config);
  else if (name == "f_consistency") body = f_consistency_campaign(config);
  else if (name == "gap") body = gap_campaign(config);
  else if (name == "threshold") body = threshold_campaign(config);
  else if (name == "nonembedding") body = nonembedding_campaign(config);
  else if (name == "highdeg") body = highdeg_campaign(config);
  else fail(ErrorCode::ConfigError, "unknown campaign '" + name + "'");
  Json cfg = Json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  return Json{{"campaign", name}, {"config", cfg}, {"rows", body["rows"]}, {"summary", body["summary"]}};
}

auto sweep_csv(const Json& report) -> std::string {
  std::ostringstream out;
  const auto& rows = report.at("rows");
  if (rows.empty()) return {};
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : ",") << (value.is_string() ? value.get<std::string>() : value.dump());
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

auto load_tree(const std::string& path) -> LabeledTree { return read_tree_file(path); }

auto embed_report(const LabeledTree& tree, const std::vector<std::string>& host, std::uint64_t budget) -> Json {
  auto p = profile(tree);
  if (host.size() == 1 && host[0] == "star") {
    auto d = decompose(tree, p);
    auto w = find_witness(tree, p, d);
    Json out{{"host", "star"}, {"n", p.l + p.m * p.delta}};
    if (w.status == WitnessStatus::Found && p.delta >= 2) {
      auto e = embed_star_host(tree, p, d, *w.certificate);
      auto cert = *w.certificate;
      if (cert.witness.size() > 1) cert.refined = refine(tree, p, d, cert.witness).vertices;
      out["witness"] = to_json(cert);
      out["embedding"] = to_json(e);
    } else {
      out["witness"] = nullptr;
      out["search"] = to_json(find_embedding_exact(tree, make_star_host(p.l, p.m, p.delta).graph(), budget));
    }
    return out;
  }
  if (host.size() == 3 && host[0] == "join") {
    auto jh = make_join_host(read_graph_file(host[1]), read_graph_file(host[2]));
    Json out{{"host", "join"}, {"n", jh.vertex_count()}};
    if (jh.part1.vertex_count() == p.l) {
      if (jh.part2.max_degree() >= p.delta && jh.vertex_count() >= p.m) {
        out["embedding"] = to_json(embed_highdeg_join(tree, p, jh));
        return out;
      }
      auto verdict = certify_nonembeddable(tree, p, jh);
      out["nonembedding"] = to_json(verdict);
      if (verdict.certified) return out;
    }
    out["search"] = to_json(find_embedding_exact(tree, jh.graph(), budget));
    return out;
  }
  if (host.size() == 1) {
    auto g = read_graph_file(host[0]);
    return Json{{"host", "file"}, {"n", g.vertex_count()}, {"search", to_json(find_embedding_exact(tree, g, budget))}};
  }
  throw CLI::ValidationError("--host", "expected star, FILE, or join FILE FILE");
}

auto construct_report(const std::string& kind, int m, int l, int delta, const std::string& spine, int pendants,
                      const std::string& tree1, const std::string& tree2, int t, std::uint64_t seed) -> LabeledTree {
  if (kind == "canonical") return canonical_member(m, l, delta);
  if (kind == "embeddable") return embeddable_member(m, l, delta);
  if (kind == "lobster") {
    CaterpillarSpec spec;
    std::stringstream in(spine);
    try {
      for (std::string tok; std::getline(in, tok, ',');) spec.leaves.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorCode::SpecInvalid, "bad spine '" + spine + "'");
    }
    return lobster_from_caterpillar(spec, pendants);
  }
  if (kind == "combine") return combine(load_tree(tree1), load_tree(tree2));
  if (kind == "random") return random_t_lt_l_member(l, delta, t, seed);
  throw CLI::ValidationError("--kind", "unknown kind " + kind);
}

}  // namespace

auto run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"Spectral extremal toolkit for trees in the delta-family"};
  app.require_subcommand(1, 1);

  std::string tree_path;
  std::string out_path;
  auto add_tree = [&](CLI::App* sub) { sub->add_option("--tree", tree_path, "tree edge-list file")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "write the report here"); };

  auto* analyze = app.add_subcommand("analyze", "profile of a tree");
  add_tree(analyze);
  add_out(analyze);

  auto* decomp = app.add_subcommand("decompose", "J, J1, J2, J' and the A_i");
  add_tree(decomp);
  add_out(decomp);

  auto* hyp = app.add_subcommand("hypothesis", "witness search or check");
  std::vector<int> witness;
  add_tree(hyp);
  add_out(hyp);
  hyp->add_option("--witness", witness, "check this subset of J'")->delimiter(',');

  auto* embed = app.add_subcommand("embed", "embed a tree into a host");
  std::vector<std::string> host;
  std::uint64_t budget = kDefaultSearchBudget;
  add_tree(embed);
  add_out(embed);
  embed->add_option("--host", host, "star | FILE | join FILE FILE")->required()->expected(1, 3);
  embed->add_option("--budget", budget, "search node budget");

  auto* construct = app.add_subcommand("construct", "build family members");
  std::string kind;
  int m = 0, l = 0, delta = 0, pendants = 0, t = 0;
  std::string spine, tree2, edges_path;
  std::uint64_t seed = 1;
  add_out(construct);
  construct->add_option("--kind", kind, "canonical|embeddable|lobster|combine|random")->required();
  construct->add_option("--m", m);
  construct->add_option("--l", l);
  construct->add_option("--delta", delta);
  construct->add_option("--t", t);
  construct->add_option("--spine", spine, "leaf counts along the spine, comma separated");
  construct->add_option("--pendants", pendants);
  construct->add_option("--tree", tree_path);
  construct->add_option("--tree2", tree2);
  construct->add_option("--seed", seed);
  construct->add_option("--edges", edges_path, "also write the tree as an edge list");

  auto* bounds = app.add_subcommand("bounds", "spectral sandwich bounds");
  double n = 0;
  bool embeddable = false;
  std::optional<double> c_value;
  add_tree(bounds);
  add_out(bounds);
  bounds->add_option("--n", n)->required();
  bounds->add_flag("--embeddable", embeddable);
  bounds->add_option("--c", c_value);

  auto* oracle = app.add_subcommand("oracle", "brute-force spex for n <= 8");
  int n_small = 0;
  add_tree(oracle);
  add_out(oracle);
  oracle->add_option("--n", n_small)->required();

  auto* sweep = app.add_subcommand("sweep", "run a campaign from a config file");
  std::string config_path;
  bool csv = false;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<double> tol;
  add_out(sweep);
  sweep->add_option("--config", config_path)->required();
  sweep->add_flag("--csv", csv);
  sweep->add_option("--seed", sweep_seed);
  sweep->add_option("--tol", tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path);
      f << text;
    }
  };

  try {
    Json report;
    if (analyze->parsed()) {
      report = to_json(profile(load_tree(tree_path)));
    } else if (decomp->parsed()) {
      auto tree = load_tree(tree_path);
      report = to_json(decompose(tree, profile(tree)));
    } else if (hyp->parsed()) {
      auto tree = load_tree(tree_path);
      auto p = profile(tree);
      auto d = decompose(tree, p);
      if (witness.empty()) {
        report = to_json(find_witness(tree, p, d));
      } else {
        report = to_json(check_with(tree, p, d, witness));
      }
    } else if (embed->parsed()) {
      report = embed_report(load_tree(tree_path), host, budget);
    } else if (construct->parsed()) {
      auto tree = construct_report(kind, m, l, delta, spine, pendants, tree_path, tree2, t, seed);
      report = Json{{"kind", kind}, {"profile", to_json(profile(tree))}, {"tree", to_json(tree.graph())}};
      if (!edges_path.empty()) {
        std::ofstream f(edges_path);
        f << format_edge_list(tree.graph());
      }
    } else if (bounds->parsed()) {
      report = to_json(spex_bounds(profile(load_tree(tree_path)), n, embeddable, c_value));
    } else if (oracle->parsed()) {
      report = to_json(brute_force_spex(n_small, load_tree(tree_path)));
    } else if (sweep->parsed()) {
      std::ifstream f(config_path);
      if (!f) fail(ErrorCode::ConfigError, "cannot open " + config_path);
      std::stringstream buf;
      buf << f.rdbuf();
      auto config = parse_config(buf.str());
      if (sweep_seed) config["seed"] = std::to_string(*sweep_seed);
      if (tol) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", *tol);
        config["tol"] = buf;
      }
      report = run_sweep(config);
      if (csv) {
        emit(sweep_csv(report));
        return 0;
      }
    }
    emit(report.dump(2) + "\n");
    return 0;
  } catch (const Error& e) {
    emit(error_json(e).dump(2) + "\n");
    return 1;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace spextree
