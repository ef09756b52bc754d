// Acceptance suite: runs every criterion end to end and prints one pass/fail
// line per criterion, with wall-clock budgets enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "lpl/cayley.hpp"
#include "lpl/connectivity.hpp"
#include "lpl/constructors.hpp"
#include "lpl/graph.hpp"
#include "lpl/group.hpp"
#include "lpl/replacement.hpp"
#include "lpl/verifier.hpp"

using namespace lpl;

namespace {

int g_jobs = 1;
int g_reports_checked = 0;
int g_report_violations = 0;

LambdaPrimeOptions options(bool transitive = false) {
  LambdaPrimeOptions opts;
  opts.use_vertex_transitivity = transitive;
  opts.jobs = g_jobs;
  return opts;
}

ConnectivityReport classify_checked(const Graph& g, std::string* fail,
                                    bool transitive = false) {
  auto report = classify(g, options(transitive));
  ++g_reports_checked;
  std::string bad = report_violations(g, report);
  if (!bad.empty()) {
    ++g_report_violations;
    if (fail && fail->empty()) *fail = "report invariants: " + bad;
  }
  return report;
}

Graph make_ccc(int n) {
  Graph q = hypercube(n);
  auto rot = default_rotation_map(q, RotationStrategy::HypercubeDims);
  return replacement_product(q, rot, cycle(n)).graph;
}

bool expect(bool cond, const std::string& what, std::string* fail) {
  if (!cond && fail->empty()) *fail = what;
  return cond;
}

// ---- criteria ----

bool criterion_hypercubes(std::string* fail) {
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    auto rep = classify_checked(hypercube(n), fail);
    ok &= expect(rep.lambda_prime == 2 * n - 2,
                 "lambda'(Q" + std::to_string(n) + ") != " + std::to_string(2 * n - 2),
                 fail);
  }
  return ok;
}

bool criterion_circulants(std::string* fail) {
  struct Case {
    int n;
    std::vector<int> gens;
    int expected;
  };
  for (const Case& c : {Case{8, {1, 3}, 6}, Case{9, {1, 2}, 6}, Case{11, {1, 2, 3}, 10}}) {
    auto rep = classify_checked(circulant(c.n, c.gens), fail);
    if (!expect(rep.lambda_prime == c.expected,
                "circulant(" + std::to_string(c.n) + ") lambda' != " +
                    std::to_string(c.expected),
                fail))
      return false;
  }
  return true;
}

bool criterion_ccc(std::string* fail) {
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    auto rep = classify_checked(make_ccc(n), fail, /*transitive=*/true);
    ok &= expect(rep.lambda == 3, "lambda(CCC" + std::to_string(n) + ") != 3", fail);
    int want = n == 3 ? 3 : 4;
    ok &= expect(rep.lambda_prime == want,
                 "lambda'(CCC" + std::to_string(n) + ") != " + std::to_string(want),
                 fail);
  }
  return ok;
}

bool criterion_inflation(std::string* fail) {
  struct Case {
    Graph g;
    std::string name;
  };
  std::vector<Case> cases;
  cases.push_back({complete(4), "K4"});
  cases.push_back({circulant(7, {1, 2}), "G(7;1,2)"});
  cases.push_back({hypercube(3), "Q3"});
  bool ok = true;
  for (auto& c : cases) {
    int d = *regular_degree(c.g);
    RotationMap rot = c.g.rotation
                          ? *c.g.rotation
                          : default_rotation_map(c.g, RotationStrategy::SortedNeighbors);
    auto product = replacement_product(c.g, rot, complete(d));
    int lambda_g = edge_connectivity(c.g).value;
    auto rep = classify_checked(product.graph, fail);
    ok &= expect(rep.lambda_prime == lambda_g,
                 "lambda'(" + c.name + " (R) K" + std::to_string(d) +
                     ") != lambda(" + c.name + ")",
                 fail);
  }
  return ok;
}

bool criterion_correspondence(std::string* fail) {
  struct Case {
    int n;
    std::vector<int> half;
  };
  for (const Case& c : {Case{3, {1}}, Case{4, {1}}, Case{6, {1, 2}}}) {
    Group a = boolean_vector_group(c.n);
    Group b = cyclic_group(c.n);
    std::vector<int> s_a;
    for (int i = 0; i < c.n; ++i) s_a.push_back(1 << i);
    std::vector<int> s_b;
    for (int s : c.half) {
      s_b.push_back(s);
      s_b.push_back(c.n - s);
    }
    auto res = check_replacement_correspondence(a, s_a, b, s_b, shift_action(c.n), 1);
    if (!expect(res.equal, "edge sets differ for n=" + std::to_string(c.n), fail))
      return false;
    if (!expect(res.cayley.vertex_count == c.n << c.n,
                "order mismatch for n=" + std::to_string(c.n), fail))
      return false;
  }
  return true;
}

bool criterion_headline(std::string* fail) {
  auto built = build_lambda_prime_gap(5, 1, options(true));
  bool ok = true;
  ok &= expect(built.graph.vertex_count == 384, "order != 384", fail);
  ok &= expect(regular_degree(built.graph) == 5, "not 5-regular", fail);
  ok &= expect(built.lambda == 5, "lambda != 5", fail);
  ok &= expect(built.lambda_prime == 6, "lambda' != 6", fail);
  ok &= expect(built.lambda_prime < 192, "lambda' not below half the order", fail);
  ok &= expect(built.report.all_hold(), "a build claim failed", fail);
  ok &= expect(small_graph_isomorphic(induced_subgraph(built.graph, built.atom),
                                      circulant(6, {1, 2})),
               "atom does not induce circulant(6,{1,2})", fail);
  CutCertificate atom_cert{built.atom, boundary_edges(built.graph, built.atom),
                           built.lambda_prime, CutKind::RestrictedEdgeCut};
  ok &= expect(validate_certificate(built.graph, atom_cert),
               "atom certificate does not validate", fail);
  return ok;
}

bool criterion_oracle_equivalence(std::string* fail) {
  std::vector<Graph> corpus;
  corpus.push_back(hypercube(2));
  corpus.push_back(hypercube(3));
  for (int n = 4; n <= 12; ++n) corpus.push_back(cycle(n));
  for (int n = 4; n <= 12; ++n) corpus.push_back(complete(n));
  for (int n = 5; n <= 12; ++n) {
    corpus.push_back(circulant(n, {1, 2}));
    if (n >= 6) corpus.push_back(circulant(n, {1, 3}));
    if (n >= 6) corpus.push_back(circulant(n, {1, 2, 3}));
    if (n % 2 == 0) corpus.push_back(circulant(n, {1, n / 2}));
  }

  // 100 seeded random regular graphs, connected and non-star by rejection
  std::uint64_t seed = 1;
  int collected = 0;
  while (collected < 100) {
    int idx = collected;
    int d = 2 + idx % 4;
    int n = 5 + (idx * 7) % 8;
    if (n <= d) n = d + 1;
    if ((n * d) % 2) ++n;
    Graph g = random_regular(n, d, seed++);
    if (!is_connected(g) || is_star(g)) continue;
    corpus.push_back(std::move(g));
    ++collected;
  }

  for (const auto& g : corpus) {
    auto lp = restricted_edge_connectivity(g, options());
    int oracle = restricted_edge_connectivity_bruteforce(g);
    if (!expect(lp.defined && lp.value == oracle,
                "flow/oracle mismatch on a corpus graph (flow " +
                    std::to_string(lp.value) + ", oracle " + std::to_string(oracle) +
                    ")",
                fail))
      return false;
  }
  return true;
}

bool criterion_bound_sweep(std::string* fail) {
  auto report = random_product_sweep(2026, 50, options());
  int applicable = 0;
  for (const auto& c : report.claims)
    if (c.status != ClaimStatus::NotApplicable) ++applicable;
  bool ok = expect(report.failed() == 0, "a product bound failed", fail);
  ok &= expect(applicable > 200, "too few applicable claims", fail);
  return ok;
}

bool criterion_report_invariants(std::string* fail) {
  // Sweep the family corpus on top of every report checked so far.
  std::vector<Graph> corpus;
  for (int n = 2; n <= 5; ++n) corpus.push_back(hypercube(n));
  for (int n = 4; n <= 10; ++n) corpus.push_back(cycle(n));
  for (int n = 4; n <= 8; ++n) corpus.push_back(complete(n));
  corpus.push_back(circulant(8, {1, 3}));
  corpus.push_back(circulant(8, {1, 3, 4}));
  corpus.push_back(circulant(9, {1, 2}));
  corpus.push_back(circulant(12, {1, 2, 5}));
  corpus.push_back(make_ccc(3));
  corpus.push_back(make_ccc(4));
  std::uint64_t seed = 1000;
  for (int i = 0; i < 20; ++i) {
    int d = 2 + i % 3;
    int n = 6 + (i * 5) % 7;
    if ((n * d) % 2) ++n;
    Graph g = random_regular(n, d, seed + i);
    if (is_connected(g)) corpus.push_back(std::move(g));
  }
  for (const auto& g : corpus) classify_checked(g, fail);

  bool ok = expect(g_report_violations == 0,
                   std::to_string(g_report_violations) + " report violations",
                   fail);
  std::fprintf(stderr, "  (%d reports checked, %d violations)\n",
               g_reports_checked, g_report_violations);
  return ok;
}

bool criterion_dichotomy(std::string* fail) {
  std::vector<std::pair<std::string, Graph>> cayleys;
  for (int n = 4; n <= 16; ++n) {
    auto add_circ = [&](std::vector<int> half) {
      std::vector<int> s;
      for (int x : half) {
        s.push_back(x);
        s.push_back((n - x) % n);
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      std::string name = "C_Z" + std::to_string(n);
      cayleys.emplace_back(name, cayley_graph({cyclic_group(n), s}));
    };
    add_circ({1});
    add_circ({1, 2});
    if (n >= 7) add_circ({1, 2, 3});
    if (n % 2 == 0) add_circ({1, n / 2});
  }
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) s.push_back(1 << i);
    cayleys.emplace_back("Q" + std::to_string(n),
                         cayley_graph({boolean_vector_group(n), s}));
  }
  for (int n : {3, 4}) {  // 24- and 64-vertex semidirect-product Cayley graphs
    Group a = boolean_vector_group(n);
    Group b = cyclic_group(n);
    std::vector<int> s_a;
    for (int i = 0; i < n; ++i) s_a.push_back(1 << i);
    auto built = build_sdp_cayley_spec(a, s_a, cyclic_group(n), {1, n - 1},
                                       shift_action(n), 1);
    cayleys.emplace_back("CCC" + std::to_string(n), cayley_graph(built.spec));
  }

  int applicable = 0;
  for (auto& [name, g] : cayleys) {
    if (g.vertex_count > 64) continue;
    auto rec = vertex_transitive_dichotomy(g, name, options(true));
    if (rec.status == ClaimStatus::NotApplicable) continue;
    ++applicable;
    if (!expect(rec.status == ClaimStatus::Holds, "dichotomy failed on " + name,
                fail))
      return false;
  }
  return expect(applicable >= 30, "too few applicable Cayley instances", fail);
}

}  // namespace

int main() {
  g_jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (g_jobs < 1) g_jobs = 1;

  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<bool(std::string*)> run;
  };
  std::vector<Criterion> criteria{
      {1, "hypercube lambda' = 2n-2 for n=2..6", 10.0, criterion_hypercubes},
      {2, "circulant lambda' = 4k-2 goldens", 5.0, criterion_circulants},
      {3, "cube-connected cycles lambda/lambda' goldens", 30.0, criterion_ccc},
      {4, "inflation lambda' equals first-factor lambda", 60.0, criterion_inflation},
      {5, "semidirect Cayley graph equals the replacement product", 10.0,
       criterion_correspondence},
      {6, "headline 384-vertex degree-5 instance with lambda' = 6", 300.0,
       criterion_headline},
      {7, "flow lambda' equals brute force on the corpus", 120.0,
       criterion_oracle_equivalence},
      {8, "random product pairs satisfy every applicable bound", 300.0,
       criterion_bound_sweep},
      {9, "connectivity reports and certificates are internally consistent", 120.0,
       criterion_report_invariants},
      {10, "vertex-transitive dichotomy on small Cayley graphs", 120.0,
       criterion_dichotomy},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string fail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(&fail);
    } catch (const std::exception& e) {
      fail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds) {
      ok = false;
      if (fail.empty())
        fail = "over budget (" + std::to_string(c.budget_seconds) + "s)";
    }
    std::printf("%s  criterion %2d (%6.2fs): %s%s%s\n", ok ? "PASS" : "FAIL", c.id,
                elapsed, c.name, fail.empty() ? "" : " -- ", fail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
