// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "grouplabel/constructions.hpp"
#include "grouplabel/explore.hpp"
#include "grouplabel/figures.hpp"
#include "grouplabel/trees.hpp"

using namespace grouplabel;

namespace {

struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

bool all_distinct(const std::vector<GroupElement>& xs) {
  return std::set<GroupElement>(xs.begin(), xs.end()).size() == xs.size();
}

SimpleGraph random_tree(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return SimpleGraph::tree(n, edges);
}

GroupElement random_element(std::mt19937_64& rng, const GroupSpec& g) {
  return g.element_at(std::uniform_int_distribution<std::size_t>(0, g.order() - 1)(rng));
}

EdgeLabeling random_labeling(std::mt19937_64& rng, const SimpleGraph& graph, const GroupSpec& g) {
  EdgeLabeling f{g, {}};
  for (std::size_t e = 0; e < graph.edge_count(); ++e) f.labels.push_back(random_element(rng, g));
  return f;
}

// 1
void figures(Check& c) {
  c.expect(verify_a_star_antimagic(figure_certificate(1).graph, figure_certificate(1).edge_labeling()).ok(), "figure 1");
  c.expect(verify_a_antimagic(figure_certificate(4).graph, figure_certificate(4).edge_labeling()).ok(), "figure 4");
  for (auto [i, g] : std::vector<std::pair<int, GroupSpec>>{{2, GroupSpec({8, 3})}, {3, GroupSpec({24})}}) {
    auto fig = figure_certificate(i);
    c.expect(verify_ea_cordial(fig.graph, fig.edge_labeling()).ok(), "figure " + std::to_string(i) + " verdict");
    c.expect(construct_ant_path(g).labels == fig.edge_labels, "figure " + std::to_string(i) + " not reproduced");
  }
}

// 2
void ant_sweep(Check& c) {
  int applicable = 0;
  for (int n = 2; n <= 48; ++n) {
    for (const auto& canonical : abelian_groups_of_order(n)) {
      std::vector<std::int64_t> f(canonical.factors().begin(), canonical.factors().end());
      std::vector<GroupSpec> presentations{canonical};
      if (canonical.rank() > 1) presentations.emplace_back(std::vector<std::int64_t>(f.rbegin(), f.rend()));
      if (isomorphic(canonical, GroupSpec::cyclic(n))) presentations.push_back(GroupSpec::cyclic(n));
      for (const auto& g : presentations) {
        if (!ant_decomposition(g)) continue;
        ++applicable;
        auto lab = construct_ant_path(g);
        auto path = SimpleGraph::path(n);
        c.expect(verify_ea_cordial(path, lab).ok(), g.to_string() + " not EA-cordial");
        c.expect(all_distinct(induce_vertex_labels(path, lab).labels), g.to_string() + " repeated vertex sum");
      }
    }
  }
  for (auto g : {GroupSpec({8}), GroupSpec({12}), GroupSpec({16}), GroupSpec({24}), GroupSpec({8, 3}), GroupSpec({16, 3}), GroupSpec({12, 3})})
    c.expect(ant_decomposition(g).has_value(), g.to_string() + " should be applicable");
  c.notes << applicable << " presentations";
}

// 3
void path_ek(Check& c) {
  std::uint64_t nodes = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int n = 2; n <= 18; ++n) {
      auto s = search_ea_cordial(SimpleGraph::path(n), GroupSpec::cyclic(k));
      nodes += s.nodes_explored;
      std::string at = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
      c.expect(s.status != SearchStatus::unknown, "search unknown at " + at);
      bool decided = decide_path_ek_cordial(n, k);
      c.expect(s.found() == decided, "decider disagrees with search at " + at);
      if (decided) {
        auto r = construct_path_ek(n, k);
        c.expect(r.status == ConstructionStatus::constructed && r.certificate &&
                     verify_ea_cordial(SimpleGraph::path(n), r.certificate->edge_labeling()).ok(),
                 "construction failed at " + at);
      }
    }
  }
  c.notes << nodes << " search nodes";
}

// 4
void cycle_zk(Check& c) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{12, 4}, {12, 12}, {9, 3}, {6, 2}, {5, 5}, {10, 5}}) {
    auto s = search_a_cordial(SimpleGraph::cycle(n), GroupSpec::cyclic(k));
    std::string at = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
    c.expect(s.status != SearchStatus::unknown, "search unknown at " + at);
    c.expect(s.found() == decide_cycle_zk_cordial(n, k), "mismatch at " + at);
  }
}

// 5
void sigma(Check& c) {
  std::vector<std::pair<GroupSpec, std::int64_t>> cases{
      {GroupSpec({3}), 3}, {GroupSpec({4}), 3},    {GroupSpec({2, 2}), 2},    {GroupSpec({5}), 5},    {GroupSpec({6}), 5},
      {GroupSpec({7}), 7}, {GroupSpec({8}), 7},    {GroupSpec({4, 2}), 8},    {GroupSpec({2, 2, 2}), 6}};
  for (const auto& [g, v] : cases) {
    auto r = compute_sigma_max(g);
    c.expect(r.status == SearchStatus::found, g.to_string() + " search unknown");
    c.expect(sigma_max_formula(g) == v, g.to_string() + " formula");
    c.expect(r.witness && r.witness->distinct_sum_count == v, g.to_string() + " search value");
  }
}

// 6
void path_antimagic(Check& c) {
  std::map<std::string, int> routes;
  for (int n = 4; n <= 16; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      auto r = construct_path_antimagic(g);
      if (n % 4 == 2) {
        c.expect(r.status == ConstructionStatus::impossible, g.to_string() + " should be impossible");
        continue;
      }
      if (r.status == ConstructionStatus::unknown) {
        c.expect(n > 15, g.to_string() + " unknown");
        continue;
      }
      ++routes[r.route];
      c.expect(r.status == ConstructionStatus::constructed && r.certificate &&
                   verify_a_antimagic(SimpleGraph::path(n), r.certificate->edge_labeling()).ok(),
               g.to_string() + " not verified");
    }
  }
  for (int n : {6, 10}) {
    for (const auto& g : abelian_groups_of_order(n)) {
      auto s = search_a_antimagic(SimpleGraph::path(n), g);
      c.expect(s.status == SearchStatus::not_exists, g.to_string() + " search did not confirm NotExists");
    }
  }
  for (auto& [route, count] : routes) c.notes << route << ":" << count << " ";
}

// 7
void star_refutation(Check& c) {
  c.expect(search_a_star_antimagic(SimpleGraph::path(4), GroupSpec({2, 2})).status == SearchStatus::not_exists, "P4");
  c.expect(search_a_star_antimagic(SimpleGraph::path(8), GroupSpec({2, 2, 2})).status == SearchStatus::not_exists, "P8");
  c.expect(search_a_star_antimagic(figure_certificate(1).graph, GroupSpec({2, 2, 2})).found(), "figure 1 tree");
}

// 8
void rstar(Check& c) {
  for (auto [g, limit] : std::vector<std::pair<GroupSpec, double>>{{GroupSpec({2, 2}), 1.0}, {GroupSpec({2, 2, 2, 2}), 60.0}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = search_rstar_sequence(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(r.found(), g.to_string() + " not found");
    c.expect(secs < limit, g.to_string() + " too slow");
    if (!r.found()) continue;
    auto f = rstar_to_path_antimagic(rotate_to_star(*r.witness));
    c.expect(verify_a_antimagic(SimpleGraph::path(static_cast<int>(g.order())), f).ok(), g.to_string() + " path fails");
  }
}

// 9
void properties(Check& c) {
  constexpr int kCases = 1000;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> factor(2, 9);

  for (int i = 0; i < kCases; ++i) {
    GroupSpec g({factor(rng), factor(rng)});
    auto a = random_element(rng, g), b = random_element(rng, g), d = random_element(rng, g);
    c.expect(add(g, add(g, a, b), d) == add(g, a, add(g, b, d)) && add(g, a, b) == add(g, b, a) &&
                 add(g, a, g.zero()) == a && add(g, a, negate(g, a)) == g.zero(),
             "group axioms");
  }

  for (int i = 0; i < kCases; ++i) {
    GroupSpec g({factor(rng), 3});
    auto graph = i % 2 ? SimpleGraph::cycle(3 + i % 11) : random_tree(rng, 2 + i % 13);
    auto f = random_labeling(rng, graph, g), h = random_labeling(rng, graph, g);
    EdgeLabeling s{g, {}};
    for (std::size_t e = 0; e < graph.edge_count(); ++e) s.labels.push_back(add(g, f.labels[e], h.labels[e]));
    auto vf = induce_vertex_labels(graph, f), vh = induce_vertex_labels(graph, h), vs = induce_vertex_labels(graph, s);
    GroupElement lhs = g.zero(), rhs = g.zero();
    for (int v = 0; v < graph.n(); ++v) {
      c.expect(vs.labels[v] == add(g, vf.labels[v], vh.labels[v]), "linearity");
      lhs = add(g, lhs, vf.labels[v]);
    }
    for (const auto& x : f.labels) rhs = add(g, rhs, add(g, x, x));
    c.expect(lhs == rhs, "sum conservation");
  }

  for (int i = 0; i < kCases; ++i) {
    GroupSpec g({factor(rng) + 3});
    auto cycle = SimpleGraph::cycle(3 + i % 17);
    auto f = random_labeling(rng, cycle, g);
    auto shift = random_element(rng, g);
    auto moved = shift_labeling(f, negate(g, shift));
    auto before = induce_vertex_labels(cycle, f), after = induce_vertex_labels(cycle, moved);
    for (int v = 0; v < cycle.n(); ++v) c.expect(after.labels[v] == add(g, before.labels[v], add(g, shift, shift)), "shift by 2g");
    auto cb = class_counts(g, f.labels), ca = class_counts(g, moved.labels);
    for (auto& [x, n] : cb) c.expect(ca.at(add(g, x, shift)) == n, "shift counts");
  }

  std::vector<GroupSpec> big{GroupSpec({8, 3}), GroupSpec({4, 3, 5}), GroupSpec({16, 3}), GroupSpec({8, 5}),
                             GroupSpec({12, 3}), GroupSpec({8, 3, 3}), GroupSpec({3, 8}), GroupSpec({4, 9})};
  std::map<std::size_t, EdgeLabeling> labs;
  for (int i = 0; i < kCases; ++i) {
    std::size_t which = i % big.size();
    const auto& g = big[which];
    if (!labs.count(which)) labs.emplace(which, construct_ant_path(g));
    const auto& lab = labs.at(which);
    std::vector<std::size_t> keep;
    for (std::size_t coord = 0; coord < g.rank(); ++coord)
      if (rng() & 1) keep.push_back(coord);
    auto path = SimpleGraph::path(static_cast<int>(g.order()));
    auto out = project_labeling(path, lab, keep);
    std::map<GroupElement, std::int64_t> summed;
    for (auto& [x, n] : class_counts(g, lab.labels)) {
      GroupElement y;
      for (auto coord : keep) y.residues.push_back(x.residues[coord]);
      summed[y] += n;
    }
    for (auto& [y, n] : class_counts(out.group, out.labels)) c.expect(summed[y] == n, "projection count identity");
    c.expect(verify_ea_cordial(path, out).ok(), "projection output");
  }

  std::vector<GroupSpec> small{GroupSpec({4}), GroupSpec({2, 2}), GroupSpec({5}), GroupSpec({6}), GroupSpec({7}),
                               GroupSpec({8}), GroupSpec({2, 4}), GroupSpec({2, 2, 2})};
  for (int i = 0; i < kCases; ++i) {
    const auto& g = small[i % small.size()];
    auto tree = random_tree(rng, static_cast<int>(g.order()));
    auto cordial = search_ea_cordial(tree, g), anti = search_a_antimagic(tree, g);
    c.expect(cordial.status == anti.status, "tree search equivalence");
    if (cordial.found()) {
      c.expect(verify_a_antimagic(tree, cordial.witness->edge_labeling()).ok(), "tree cordial witness not antimagic");
      c.expect(verify_ea_cordial(tree, anti.witness->edge_labeling()).ok(), "tree antimagic witness not cordial");
    }
    auto f = random_labeling(rng, tree, g);
    c.expect(verify_ea_cordial(tree, f).ok() == verify_a_antimagic(tree, f).ok(), "tree verifier equivalence");
  }
  c.notes << "6 suites x " << kCases << " cases";
}

// 10
void explore(Check& c) {
  auto report = explore_conjecture(8);
  for (const auto& r : report.rows) {
    std::string at = r.group.to_string() + " " + r.tree_form;
    if (r.n == 2 || r.n == 6) c.expect(r.antimagic.status == SearchStatus::not_exists, "expected NotExists for " + at);
    else c.expect(r.antimagic.found(), "expected Found for " + at);
  }
  c.notes << report.rows.size() << " rows";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "figure fidelity", 1, figures},
      {2, "block construction sweep up to order 48", 5, ant_sweep},
      {3, "path E_k-cordial decider equals search, 2<=k<=6, 2<=n<=18", 600, path_ek},
      {4, "cycle Z_k-cordial spot checks", 120, cycle_zk},
      {5, "sigma_max search equals formula, orders 3-8", 60, sigma},
      {6, "A-antimagic paths for orders 4-16", 900, path_antimagic},
      {7, "A*-antimagic counterexamples", 60, star_refutation},
      {8, "R*-sequence route", 60, rstar},
      {9, "randomized property suites", 60, properties},
      {10, "conjecture exploration up to 8 vertices", 600, explore},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_seconds) {
      c.ok = false;
      c.notes << " over time limit " << cr.limit_seconds << " s";
    }
    failures += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << cr.id << "  " << cr.name << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!c.notes.str().empty()) std::cout << "  " << c.notes.str();
    std::cout << std::endl;
  }
  return failures ? 1 : 0;
}
