#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "grouplabel/constructions.hpp"
#include "grouplabel/explore.hpp"
#include "grouplabel/figures.hpp"

namespace grouplabel::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string output;
  std::optional<std::uint64_t> budget;
  std::optional<double> time_budget;
  unsigned threads = 1;
  std::string fixtures = GROUPLABEL_FIXTURES_DIR;

  std::string target;
  std::string group;
  std::string graph;
  std::string file;
  std::string mode = "both";
  std::int64_t n = 0;
  std::int64_t k = 0;
  int n_max = 8;
  int figure = 0;
};

struct Document {
  int code = kOk;
  Json json;
  std::string text;
};

constexpr double kNodesPerSecond = 1e6;

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.threads = std::max(1u, o.threads);
  if (o.budget) {
    b.nodes = *o.budget;
  } else if (const char* env = std::getenv("GROUPLABEL_BUDGET"); env && *env) {
    std::string_view s(env);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("GROUPLABEL_BUDGET must be a node count");
    b.nodes = v;
  } else if (o.time_budget) {
    if (*o.time_budget <= 0) throw UsageError("--time-budget must be positive");
    b.nodes = static_cast<std::uint64_t>(*o.time_budget * kNodesPerSecond);
  }
  return b;
}

GroupSpec group_of(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  return GroupSpec::parse(o.group);
}

int to_int(std::string_view s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError(std::string("bad number in ") + what + ": " + std::string(s));
  return v;
}

std::vector<Edge> parse_edges(std::string_view list) {
  std::vector<Edge> edges;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = list.substr(0, comma);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw UsageError("edges are written u-v");
    edges.emplace_back(to_int(item.substr(0, dash), "edge"), to_int(item.substr(dash + 1), "edge"));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
  }
  return edges;
}

SimpleGraph tree_from_edges(std::vector<Edge> edges) {
  int n = 1;
  for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  return SimpleGraph::tree(n, std::move(edges));
}

SimpleGraph graph_of(std::string_view text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in{std::string(text.substr(1))};
    if (!in) throw UsageError("cannot read edge list " + std::string(text.substr(1)));
    std::vector<Edge> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    if (!in.eof()) throw UsageError("edge list lines are two vertex numbers");
    return tree_from_edges(std::move(edges));
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw UsageError("graph is path:N, cycle:N, star:L, tree:u-v,... or @file");
  auto kind = text.substr(0, colon), rest = text.substr(colon + 1);
  if (kind == "path") return SimpleGraph::path(to_int(rest, "graph"));
  if (kind == "cycle") return SimpleGraph::cycle(to_int(rest, "graph"));
  if (kind == "star") return SimpleGraph::star(to_int(rest, "graph"));
  if (kind == "tree") return tree_from_edges(parse_edges(rest));
  throw UsageError("unknown graph kind " + std::string(kind));
}

// ---------------------------------------------------------------------------
// text rendering

std::string element_text(const GroupElement& a) {
  if (a.residues.size() == 1) return std::to_string(a.residues[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.residues.size(); ++i) s += (i ? "," : "") + std::to_string(a.residues[i]);
  return s + ")";
}

std::string labels_text(const std::vector<GroupElement>& labels) {
  std::string s;
  for (const auto& a : labels) s += (s.empty() ? "" : " ") + element_text(a);
  return s;
}

std::string graph_text(const SimpleGraph& g) {
  std::string s = std::string(to_string(g.kind())) + " on " + std::to_string(g.n()) + " vertices";
  if (g.kind() == GraphKind::tree || g.kind() == GraphKind::general) {
    s += ", edges";
    for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

std::string verdict_text(const Verdict& v) {
  return v.ok() ? "ok" : "violated (" + std::string(to_string(*v.violation)) + ")";
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream s;
  s << "notion: " << to_string(c.notion) << "\n"
    << "group: " << c.group.to_string() << "\n"
    << "graph: " << graph_text(c.graph) << "\n"
    << "edge labels: " << labels_text(c.edge_labels) << "\n"
    << "vertex labels: " << labels_text(c.vertex_labels) << "\n"
    << "verdict: " << verdict_text(c.verdict) << "\n";
  return s.str();
}

// Every certificate leaves through here.
const Certificate& reverified(const Certificate& c) {
  if (recertify(c) != c) throw std::logic_error("certificate failed re-verification");
  return c;
}

Json sequence_json(const std::vector<GroupElement>& seq) {
  Json out = Json::array();
  for (const auto& a : seq) out.push_back(element_to_json(a));
  return out;
}

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return kOk;
    case SearchStatus::not_exists: return kNegative;
    case SearchStatus::unknown: return kUnknown;
  }
  return kUnknown;
}

// ---------------------------------------------------------------------------
// commands

Document construct(const Options& o) {
  auto budget = budget_of(o);
  ConstructionResult r;
  Json what;
  if (o.target == "antimagic-path") {
    auto g = group_of(o);
    what = {{"group", group_to_json(g)}};
    r = construct_path_antimagic(g, budget);
  } else if (o.target == "ek-path") {
    if (o.n < 2 || o.k < 2) throw UsageError("ek-path needs --n >= 2 and --k >= 2");
    what = {{"n", o.n}, {"k", o.k}};
    r = construct_path_ek(o.n, o.k, budget);
  } else {
    auto g = group_of(o);
    what = {{"group", group_to_json(g)}};
    try {
      auto f = construct_ant_path(g, budget);
      r = {ConstructionStatus::constructed, "block", certify(Notion::ea_cordial, SimpleGraph::path(static_cast<int>(g.order())), f), 0};
    } catch (const InapplicableGroup&) {
      r = {ConstructionStatus::impossible, "inapplicable", std::nullopt, 0};
    } catch (const BudgetExhausted&) {
      r = {ConstructionStatus::unknown, "block", std::nullopt, 0};
    }
  }
  Document d;
  d.json["command"] = "construct";
  d.json["target"] = o.target;
  d.json["input"] = what;
  d.json["status"] = std::string(to_string(r.status));
  d.json["route"] = r.route;
  d.json["nodes_explored"] = r.nodes_explored;
  d.json["certificate"] = r.certificate ? to_json(reverified(*r.certificate)) : Json(nullptr);
  d.text = "status: " + std::string(to_string(r.status)) + "\nroute: " + r.route + "\n";
  if (r.certificate) d.text += certificate_text(*r.certificate);
  d.code = r.status == ConstructionStatus::constructed ? kOk : r.status == ConstructionStatus::impossible ? kNegative : kUnknown;
  return d;
}

Json read_json_input(const std::string& file) {
  try {
    if (file.empty() || file == "-") return Json::parse(std::cin);
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

Document verify_cmd(const Options& o) {
  auto j = read_json_input(o.file);
  if (j.is_object() && j.contains("certificate") && !j.contains("notion")) j = j["certificate"];
  auto cert = certificate_from_json(j);
  auto fresh = recertify(cert);
  Document d;
  d.json["command"] = "verify";
  d.json["notion"] = std::string(to_string(cert.notion));
  d.json["valid"] = fresh.verdict.ok();
  d.json["verdict"] = verdict_to_json(fresh.verdict);
  d.text = "notion: " + std::string(to_string(cert.notion)) + "\nverdict: " + verdict_text(fresh.verdict) + "\n";
  d.code = fresh.verdict.ok() ? kOk : kNegative;
  return d;
}

Document decide_cmd(const Options& o) {
  Document d;
  d.json["command"] = "decide";
  d.json["question"] = o.target;
  bool yes;
  std::string answer;
  if (o.target == "path-ek") {
    d.json["n"] = o.n;
    d.json["k"] = o.k;
    yes = decide_path_ek_cordial(o.n, o.k);
    answer = yes ? "possible" : "impossible";
  } else if (o.target == "cycle-zk") {
    d.json["n"] = o.n;
    d.json["k"] = o.k;
    yes = decide_cycle_zk_cordial(o.n, o.k);
    answer = yes ? "possible" : "impossible";
  } else if (o.target == "path-antimagic") {
    auto g = group_of(o);
    d.json["group"] = group_to_json(g);
    yes = decide_path_a_antimagic(g);
    answer = yes ? "possible" : "impossible";
  } else {
    auto g = group_of(o);
    d.json["n"] = o.n;
    d.json["group"] = group_to_json(g);
    yes = !decide_tree_2mod4_obstruction(o.n, g);
    answer = yes ? "not-obstructed" : "obstructed";
  }
  d.json["answer"] = answer;
  d.text = answer + "\n";
  d.code = yes ? kOk : kNegative;
  return d;
}

Document search_cmd(const Options& o) {
  auto budget = budget_of(o);
  auto g = group_of(o);
  Document d;
  d.json["command"] = "search";
  d.json["kind"] = o.target;
  d.json["group"] = group_to_json(g);
  SearchStatus status;
  std::uint64_t nodes;
  Json witness(nullptr);
  std::string witness_text;

  if (o.target == "rstar") {
    auto r = search_rstar_sequence(g, budget);
    status = r.status;
    nodes = r.nodes_explored;
    if (r.witness) {
      validate(*r.witness);
      witness = {{"sequence", sequence_json(r.witness->seq)}, {"star_index", r.witness->star_index}};
      witness_text = "sequence: " + labels_text(r.witness->seq) + "\nstar index: " + std::to_string(r.witness->star_index) + "\n";
    }
  } else if (o.target == "rainbow") {
    auto r = search_rainbow_cycle(g, budget);
    status = r.status;
    nodes = r.nodes_explored;
    if (r.witness) {
      validate(*r.witness);
      witness = {{"order", sequence_json(r.witness->order)}, {"distinct_sum_count", r.witness->distinct_sum_count}};
      witness_text = "cycle: " + labels_text(r.witness->order) + "\n";
    }
  } else {
    bool cordial = o.target == "ea-cordial" || o.target == "a-cordial";
    if (cordial && o.graph.empty()) throw UsageError("--graph is required for " + o.target);
    auto graph = o.graph.empty() ? SimpleGraph::path(static_cast<int>(g.order())) : graph_of(o.graph);
    d.json["graph"] = graph_to_json(graph);
    LabelingOutcome r;
    if (o.target == "ea-cordial") r = search_ea_cordial(graph, g, budget);
    else if (o.target == "a-cordial") r = search_a_cordial(graph, g, budget);
    else if (o.target == "a-antimagic") r = search_a_antimagic(graph, g, budget);
    else r = search_a_star_antimagic(graph, g, budget);
    status = r.status;
    nodes = r.nodes_explored;
    if (r.witness) {
      witness = to_json(reverified(*r.witness));
      witness_text = certificate_text(*r.witness);
    }
  }
  d.json["status"] = std::string(to_string(status));
  d.json["nodes_explored"] = nodes;
  d.json["certificate"] = witness;
  d.text = "status: " + std::string(to_string(status)) + "\nnodes explored: " + std::to_string(nodes) + "\n" + witness_text;
  d.code = status_code(status);
  return d;
}

Document sigma_cmd(const Options& o) {
  auto g = group_of(o);
  Document d;
  d.json["command"] = "sigma-max";
  d.json["group"] = group_to_json(g);
  d.json["mode"] = o.mode;
  std::optional<std::int64_t> formula;
  if (o.mode != "search") {
    formula = sigma_max_formula(g);
    d.json["formula"] = *formula;
    d.text += "formula: " + std::to_string(*formula) + "\n";
  }
  if (o.mode == "formula") return d;

  auto r = compute_sigma_max(g, budget_of(o));
  if (r.witness) validate(*r.witness);
  Json s;
  s["status"] = std::string(to_string(r.status));
  s["value"] = r.witness ? Json(r.witness->distinct_sum_count) : Json(nullptr);
  s["nodes_explored"] = r.nodes_explored;
  s["cycle"] = r.witness ? sequence_json(r.witness->order) : Json(nullptr);
  d.json["search"] = s;
  if (r.status == SearchStatus::found) {
    d.text += "search: " + std::to_string(r.witness->distinct_sum_count) + "\ncycle: " + labels_text(r.witness->order) + "\n";
  } else {
    d.text += "search: unknown (best so far " + (r.witness ? std::to_string(r.witness->distinct_sum_count) : "none") + ")\n";
    d.code = kUnknown;
    return d;
  }
  if (formula) {
    bool agree = *formula == r.witness->distinct_sum_count;
    d.json["agree"] = agree;
    d.text += std::string("agree: ") + (agree ? "yes" : "no") + "\n";
    d.code = agree ? kOk : kNegative;
  }
  return d;
}

Document explore_cmd(const Options& o) {
  auto report = explore_conjecture(o.n_max, budget_of(o));
  Document d;
  d.json = to_json(report);
  std::ostringstream s;
  int current = 0;
  for (const auto& r : report.rows) {
    if (r.n != current) {
      current = r.n;
      s << "n = " << r.n << "\n";
    }
    s << "  " << r.group.to_string() << "  " << r.tree_form << "  A-antimagic: " << to_string(r.antimagic.status)
      << "  A*-antimagic: " << to_string(r.star.status) << (r.counterexample() ? "  COUNTEREXAMPLE" : "") << "\n";
  }
  s << "trees A*-antimagic for every group with |I(A)| != 1:\n";
  for (const auto& t : report.star_summaries) {
    if (t.all_groups != SearchStatus::not_exists) s << "  n = " << t.n << "  " << t.tree_form << "  " << to_string(t.all_groups) << "\n";
  }
  auto counter = report.counterexamples().size();
  s << "conjecture consistent: " << (counter == 0 ? "yes" : "no") << ", unknown rows: " << report.unknown_rows() << "\n";
  d.text = s.str();
  d.code = counter ? kNegative : report.unknown_rows() ? kUnknown : kOk;
  return d;
}

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Document demo_cmd(const Options& o) {
  static const char* captions[] = {
      "",
      "A*-antimagic labeling of a tree on 8 vertices over Z2xZ2xZ2",
      "EA-cordial labeling of P24 over Z8xZ3",
      "EA-cordial labeling of P24 over Z24",
      "A-antimagic labeling of P8 over Z2xZ2xZ2",
  };
  std::string path = o.fixtures + "/figure" + std::to_string(o.figure) + ".json";
  auto load = [&] {
    try {
      std::ifstream in(path);
      if (!in) throw FixtureError("cannot read " + path);
      return certificate_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
      throw FixtureError(path + ": " + e.what());
    } catch (const CertificateError& e) {
      throw FixtureError(path + ": " + e.what());
    }
  };
  auto cert = load();
  if (recertify(cert) != cert || !cert.verdict.ok()) throw FixtureError(path + " does not verify");

  Document d;
  d.json["command"] = "demo";
  d.json["figure"] = o.figure;
  d.json["caption"] = captions[o.figure];
  d.json["certificate"] = to_json(cert);
  d.text = "figure " + std::to_string(o.figure) + ": " + captions[o.figure] + "\n" + certificate_text(cert);
  if (o.figure == 2 || o.figure == 3) {
    auto regenerated = construct_ant_path(cert.group, budget_of(o));
    bool same = regenerated.labels == cert.edge_labels;
    if (!same) throw FixtureError(path + " differs from the regenerated labeling");
    d.json["regenerated_matches"] = same;
    d.text += "regenerated: identical\n";
  }
  return d;
}

void emit(const Options& o, const Document& d, std::ostream& out) {
  std::string body = o.format == "json" ? d.json.dump(2) + "\n" : d.text;
  if (o.output.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.output);
  f << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Group labelings of paths, cycles and trees", "grouplabel"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output,-o", o.output, "write the document to a file");
  app.add_option("--budget", o.budget, "search node budget (default 10^7, or $GROUPLABEL_BUDGET)");
  app.add_option("--time-budget", o.time_budget, "seconds, converted to nodes at 10^6 per second");
  app.add_option("--threads", o.threads, "worker threads for labeling searches")->check(CLI::Range(1u, 256u));
  app.add_option("--fixtures", o.fixtures, "directory holding figure fixtures");

  auto* c = app.add_subcommand("construct", "build a labeling");
  c->add_option("target", o.target)->required()->check(CLI::IsMember({"antimagic-path", "ek-path", "ant-path"}));
  c->add_option("--group,-g", o.group);
  c->add_option("--n", o.n);
  c->add_option("--k", o.k);

  auto* v = app.add_subcommand("verify", "check a certificate (file or stdin)");
  v->add_option("file", o.file);

  auto* dc = app.add_subcommand("decide", "closed-form answers");
  dc->add_option("question", o.target)->required()->check(CLI::IsMember({"path-ek", "cycle-zk", "path-antimagic", "tree-2mod4"}));
  dc->add_option("--group,-g", o.group);
  dc->add_option("--n", o.n);
  dc->add_option("--k", o.k);

  auto* s = app.add_subcommand("search", "exhaustive search");
  s->add_option("kind", o.target)
      ->required()
      ->check(CLI::IsMember({"ea-cordial", "a-cordial", "a-antimagic", "a-star-antimagic", "rstar", "rainbow"}));
  s->add_option("--group,-g", o.group)->required();
  s->add_option("--graph", o.graph, "path:N, cycle:N, star:L, tree:u-v,... or @edge-list-file");

  auto* sg = app.add_subcommand("sigma-max", "maximum number of distinct consecutive sums");
  sg->add_option("--group,-g", o.group)->required();
  sg->add_option("--mode", o.mode)->check(CLI::IsMember({"formula", "search", "both"}));

  auto* ex = app.add_subcommand("explore", "trees against every group of the same order");
  ex->add_option("--n-max", o.n_max)->check(CLI::Range(2, kMaxExploration));

  auto* dm = app.add_subcommand("demo", "bundled figures");
  dm->add_option("figure", o.figure)->required()->check(CLI::Range(1, 4));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Document d;
    if (c->parsed()) d = construct(o);
    else if (v->parsed()) d = verify_cmd(o);
    else if (dc->parsed()) d = decide_cmd(o);
    else if (s->parsed()) d = search_cmd(o);
    else if (sg->parsed()) d = sigma_cmd(o);
    else if (ex->parsed()) d = explore_cmd(o);
    else d = demo_cmd(o);
    emit(o, d, out);
    return d.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const FixtureError& e) {
    err << "error: corrupt fixture: " << e.what() << "\n";
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace grouplabel::cli
