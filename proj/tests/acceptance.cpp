// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Heavier sweeps are shared between criteria; everything runs at
// desk scale (the published large-order sweeps are out of scope, see the
// README).

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "histlab/canon.hpp"
#include "histlab/classify.hpp"
#include "histlab/constructions.hpp"
#include "histlab/generate.hpp"
#include "histlab/graph6.hpp"
#include "histlab/hist_search.hpp"
#include "histlab/oracles.hpp"
#include "histlab/planarity.hpp"

using namespace histlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail,
            double seconds) {
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << criterion << "  " << what;
    if (!detail.empty()) line << "  [" << detail << "]";
    line << "  (" << seconds << "s)";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
}

template <typename F>
void criterion(int number, const std::string& what, F&& run) {
    auto t0 = Clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(number, pass, what, detail, std::chrono::duration<double>(Clock::now() - t0).count());
}

Graph prism6() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

Graph random_connected(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    for (;;) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) g.add_edge(i, j);
        if (is_connected(g)) return g;
    }
}

std::vector<Graph> generate_list(const GenConstraints& c) { return generate_all(c); }

}  // namespace

int main() {
    auto suite_start = Clock::now();

    // 1. Antiprism formula vs search.
    criterion(1, "antiprism HIST counts equal 2k(2k-2) for k = 3..8", [&](std::string& detail) {
        bool ok = true;
        std::ostringstream d;
        for (int k = 3; k <= 8; ++k) {
            BigCount got = count_hists(antiprism(k).graph);
            BigCount want = 2 * k * (2 * k - 2);
            if (got != want) ok = false;
            d << (k > 3 ? " " : "") << got;
        }
        detail = d.str() + " vs 24 48 80 120 168 224";
        return ok;
    });

    // Shared sweep for criteria 2 and 3: 2-connected graphs by order, the
    // HIST-critical survivors retained.
    std::map<int, std::vector<Graph>> critical_by_order;
    criterion(2, "2-connected HIST-critical counts, orders 3..10 plus girth rows at 11",
              [&](std::string& detail) {
                  const int expect[] = {1, 0, 0, 0, 2, 0, 2, 0};  // h(3)..h(10)
                  bool ok = true;
                  std::ostringstream d;
                  for (int n = 3; n <= 10; ++n) {
                      GenConstraints c;
                      c.order = n;
                      c.connectivity_min = 2;
                      std::vector<Graph> found;
                      generate(c, [&](const Graph& g) {
                          if (is_hist_critical(g)) found.push_back(g);
                          return true;
                      });
                      critical_by_order[n] = found;
                      if (static_cast<int>(found.size()) != expect[n - 3]) ok = false;
                      d << (n > 3 ? " " : "h(n)=") << found.size();
                  }
                  for (int girth : {4, 5}) {
                      GenConstraints c;
                      c.order = 11;
                      c.connectivity_min = 2;
                      c.girth_min = girth;
                      long count = 0;
                      generate(c, [&](const Graph& g) {
                          count += is_hist_critical(g);
                          return true;
                      });
                      if (count != (girth == 4 ? 3 : 1)) ok = false;
                      d << " h(" << girth << ",11)=" << count;
                  }
                  detail = d.str();
                  return ok;
              });

    criterion(3, "planar HIST-critical counts, orders 3..10", [&](std::string& detail) {
        const int expect[] = {1, 0, 0, 0, 2, 0, 0, 0};
        bool ok = true;
        std::ostringstream d;
        for (int n = 3; n <= 10; ++n) {
            int count = 0;
            for (const Graph& g : critical_by_order[n]) count += is_planar(g);
            if (count != expect[n - 3]) ok = false;
            d << (n > 3 ? " " : "") << count;
        }
        detail = d.str() + " vs 1 0 0 0 2 0 0 0";
        return ok;
    });

    // Shared sweep for criteria 4 and 5: planar 4-connected graphs with
    // their HIST counts.
    std::map<int, std::vector<BigCount>> planar4_hists;
    criterion(4, "planar 4-connected counts for orders 6..10, all with a HIST",
              [&](std::string& detail) {
                  const int expect[] = {1, 1, 4, 10, 53};
                  bool ok = true;
                  std::ostringstream d;
                  for (int n = 6; n <= 10; ++n) {
                      GenConstraints c;
                      c.order = n;
                      c.min_degree = 4;
                      c.connectivity_min = 4;
                      c.planar_only = true;
                      std::vector<BigCount> counts;
                      generate(c, [&](const Graph& g) {
                          counts.push_back(count_hists(g));
                          return true;
                      });
                      for (const BigCount& h : counts)
                          if (h == 0) ok = false;  // every one must have a HIST
                      if (static_cast<int>(counts.size()) != expect[n - 6]) ok = false;
                      planar4_hists[n] = std::move(counts);
                      d << (n > 6 ? " " : "") << planar4_hists[n].size();
                  }
                  detail = d.str() + " vs 1 1 4 10 53, all HIST counts positive";
                  return ok;
              });

    criterion(5, "minimum HIST counts p(7) = 30 and p(9) = 62, each attained once",
              [&](std::string& detail) {
                  bool ok = true;
                  std::ostringstream d;
                  for (int n : {7, 9}) {
                      const auto& counts = planar4_hists[n];
                      if (counts.empty()) {
                          ok = false;
                          continue;
                      }
                      BigCount min = counts[0];
                      for (const BigCount& c : counts) min = std::min(min, c);
                      int attained = 0;
                      for (const BigCount& c : counts) attained += c == min;
                      BigCount want = n == 7 ? 30 : 62;
                      if (min != want || attained != 1) ok = false;
                      d << "p(" << n << ")=" << min << " x" << attained << " ";
                  }
                  detail = d.str();
                  return ok;
              });

    criterion(6, "fragment properties 1-4 for F1 and F2; F1's excluded HISTs",
              [&](std::string& detail) {
                  LabeledFragment f1 = fragment_f1();
                  LabeledFragment f2 = fragment_f2();
                  FragmentReport r1 = verify_fragment(f1.fragment);
                  FragmentReport r2 = verify_fragment(f2.fragment);
                  bool ok = r1.all() && r2.all();

                  auto tree = [&](std::vector<std::pair<const char*, const char*>> pairs) {
                      std::vector<Edge> t;
                      for (auto [a, b] : pairs) t.emplace_back(f1.label(a), f1.label(b));
                      std::sort(t.begin(), t.end());
                      return t;
                  };
                  std::set<std::vector<Edge>> expect{
                      tree({{"x", "v3"}, {"x", "v6"}, {"y", "v1"}, {"y", "v4"},
                            {"v1", "v2"}, {"v1", "v6"}, {"v5", "v6"}}),
                      tree({{"x", "v3"}, {"x", "v6"}, {"y", "v1"}, {"y", "v4"},
                            {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}}),
                  };
                  auto hists = enumerate_excluded_hists(f1.fragment);
                  std::set<std::vector<Edge>> got(hists.begin(), hists.end());
                  if (got != expect) ok = false;
                  detail = "F1 " + std::string(r1.all() ? "all-pass" : "FAIL") + ", F2 " +
                           (r2.all() ? "all-pass" : "FAIL") + ", excluded HISTs " +
                           (got == expect ? "exact" : "differ");
                  return ok;
              });

    criterion(7, "chains F1+F1 (order 14) and F1+F2 (order 18) are HIST-critical",
              [&](std::string& detail) {
                  Fragment f1 = fragment_f1().fragment;
                  Fragment f2 = fragment_f2().fragment;
                  Graph c11 = chain({f1, f1});
                  Graph c12 = chain({f1, f2});
                  bool ok = c11.order() == 14 && c12.order() == 18;
                  Classification a = classify(c11), b = classify(c12);
                  if (a.verdict != Verdict::HistCritical) ok = false;
                  if (b.verdict != Verdict::HistCritical) ok = false;
                  detail = "orders 14, 18; both HistCritical";
                  return ok;
              });

    criterion(8, "G_k and H_k are HIST-critical for k in {4, 6, 8}; H_k is 3-connected",
              [&](std::string& detail) {
                  bool ok = true;
                  for (int k : {4, 6, 8}) {
                      if (classify(g_k(k).graph).verdict != Verdict::HistCritical) ok = false;
                      Graph hk = h_k(k).graph;
                      if (classify(hk).verdict != Verdict::HistCritical) ok = false;
                      if (!vertex_connectivity_at_least(hk, 3)) ok = false;
                  }
                  detail = "orders 13, 19, 25";
                  return ok;
              });

    criterion(9, "gluing the two order-7 HIST-critical graphs stays K1-histonian with a HIST",
              [&](std::string& detail) {
                  const auto& sevens = critical_by_order[7];
                  if (sevens.size() != 2) {
                      detail = "order-7 list missing";
                      return false;
                  }
                  auto nonadjacent_pairs = [](const Graph& g) {
                      std::vector<std::pair<int, int>> out;
                      for (int u = 0; u < g.order(); ++u)
                          for (int v = 0; v < g.order(); ++v)
                              if (u != v && !g.has_edge(u, v)) out.emplace_back(u, v);
                      return out;
                  };
                  int checked = 0;
                  for (auto [xa, ya] : nonadjacent_pairs(sevens[0]))
                      for (auto [xb, yb] : nonadjacent_pairs(sevens[1])) {
                          Graph glued = glue(sevens[0], xa, ya, sevens[1], xb, yb);
                          if (glued.order() != 13) return false;
                          if (!has_hist(glued) || !is_k1_histonian(glued)) {
                              detail = "failed at a terminal choice";
                              return false;
                          }
                          ++checked;
                      }
                  detail = std::to_string(checked) + " terminal choices";
                  return checked > 0;
              });

    criterion(10, "line-graph correspondences (3k trees at orders 6, 10; 6k unicyclics at 4, 8)",
              [&](std::string& detail) {
                  bool ok = true;
                  std::ostringstream d;
                  for (int n : {6, 10}) {
                      GenConstraints c;
                      c.order = n;
                      c.connectivity_min = 1;
                      c.regular_k = 3;
                      int k = (n - 2) / 4;
                      for (const Graph& g : generate_list(c)) {
                          BigCount lhs = 3 * k * count_one_end_induced_trees(g);
                          BigCount rhs = count_hists(line_graph(g));
                          if (lhs != rhs) {
                              ok = false;
                              d << "tree identity fails at order " << n << "; ";
                          }
                      }
                  }
                  for (int n : {4, 8}) {
                      GenConstraints c;
                      c.order = n;
                      c.connectivity_min = 1;
                      c.regular_k = 3;
                      int k = n / 4;
                      for (const Graph& g : generate_list(c)) {
                          BigCount lhs = 6 * k * count_one_end_induced_unicyclics(g);
                          BigCount rhs = count_hists(line_graph(g));
                          if (lhs != rhs) {
                              ok = false;
                              d << "unicyclic identity fails at order " << n << " ("
                                << lhs << " != " << rhs << "); ";
                          }
                      }
                  }
                  detail = d.str();
                  if (ok) detail = "all identities hold";
                  return ok;
              });

    criterion(11, "line graph of the truncated prism: 27 vertices, 4-regular, planar, "
                  "3-connected, HIST-free",
              [&](std::string& detail) {
                  Graph l = line_graph(truncate_cubic(prism6()));
                  bool ok = l.order() == 27 && is_regular(l, 4) && is_planar(l) &&
                            vertex_connectivity_at_least(l, 3) && !has_hist(l);
                  detail = "order " + std::to_string(l.order());
                  return ok;
              });

    criterion(12, "K4-inflation HIST existence implies a hamiltonian path (4-regular, n <= 9)",
              [&](std::string& detail) {
                  int checked = 0, traceable = 0;
                  for (int n = 5; n <= 9; ++n) {
                      GenConstraints c;
                      c.order = n;
                      c.connectivity_min = 1;
                      c.regular_k = 4;
                      for (const Graph& g : generate_list(c)) {
                          ++checked;
                          // Vacuous when a hamiltonian path exists; otherwise
                          // the inflation must prove itself HIST-free.
                          if (ham_path_exists(g)) {
                              ++traceable;
                              continue;
                          }
                          if (has_hist(inflate_k4(g))) {
                              detail = "counterexample at order " + std::to_string(n);
                              return false;
                          }
                      }
                  }
                  detail = std::to_string(checked) + " graphs, " + std::to_string(traceable) +
                           " with hamiltonian paths";
                  return checked > 0;
              });

    criterion(13, "even order, max degree <= 3: no vertex-deleted subgraph has a HIST (n <= 10)",
              [&](std::string& detail) {
                  int checked = 0;
                  for (int n = 4; n <= 10; n += 2) {
                      GenConstraints c;
                      c.order = n;
                      c.connectivity_min = 1;
                      c.max_degree = 3;
                      for (const Graph& g : generate_list(c)) {
                          ++checked;
                          if (!check_even_cubic_property(g)) {
                              detail = "violated at order " + std::to_string(n);
                              return false;
                          }
                      }
                  }
                  detail = std::to_string(checked) + " graphs";
                  return checked > 0;
              });

    criterion(14, "Jaeger bound on connected cubic graphs of order <= 10",
              [&](std::string& detail) {
                  int checked = 0;
                  for (int n = 4; n <= 10; n += 2) {
                      GenConstraints c;
                      c.order = n;
                      c.connectivity_min = 1;
                      c.regular_k = 3;
                      for (const Graph& g : generate_list(c)) {
                          ++checked;
                          if (max_induced_forest(g) > (3 * n - 2) / 4) {
                              detail = "bound violated at order " + std::to_string(n);
                              return false;
                          }
                      }
                  }
                  detail = std::to_string(checked) + " graphs";
                  return checked > 0;
              });

    criterion(15, "algorithm cross-validation: three counters agree; degenerated searches "
                  "visit the matrix-tree count",
              [&](std::string& detail) {
                  // All connected graphs with n <= 7.
                  for (int n = 2; n <= 7; ++n) {
                      GenConstraints c;
                      c.order = n;
                      c.connectivity_min = 1;
                      for (const Graph& g : generate_list(c)) {
                          BigCount a = count_hists(g);
                          if (a != count_hists_exchange(g) || a != brute_force_hists(g)) {
                              detail = "disagreement at order " + std::to_string(n);
                              return false;
                          }
                      }
                  }
                  // 500 random connected graphs on 8 and 9 vertices.
                  std::mt19937 rng(20230915);
                  for (int rep = 0; rep < 500; ++rep) {
                      Graph g = random_connected(8 + rep % 2, 0.45, rng);
                      BigCount a = count_hists(g);
                      if (a != count_hists_exchange(g) || a != brute_force_hists(g)) {
                          detail = "disagreement on a random graph";
                          return false;
                      }
                  }
                  // 200 random connected graphs, pruning and filters off.
                  for (int rep = 0; rep < 200; ++rep) {
                      Graph g = random_connected(4 + rep % 6, 0.5, rng);
                      BigCount trees = kirchhoff_count(g);
                      if (spanning_trees_visited(g) != trees ||
                          exchange_spanning_trees(g) != trees) {
                          detail = "spanning-tree degeneration mismatch";
                          return false;
                      }
                  }
                  detail = "n <= 7 exhaustive, 500 random, 200 degenerated";
                  return true;
              });

    double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(failures) + " CRITERIA FAILED")
              << " (" << total << "s total)" << std::endl;
    return failures == 0 ? 0 : 1;
}
