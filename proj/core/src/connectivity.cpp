#include "lpl/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "lpl/flow.hpp"
#include "lpl/multigraph.hpp"

namespace lpl {

bool lambda_prime_defined(const Graph& g) {
  return g.vertex_count >= 4 && !is_star(g) && is_connected(g);
}

LambdaResult edge_connectivity(const Graph& g) {
  if (g.vertex_count < 2)
    throw std::invalid_argument("edge_connectivity: need at least 2 vertices");
  auto comps = components(g);
  if (comps.size() > 1) {
    LambdaResult out;
    out.value = 0;
    out.certificate = {comps[0], {}, 0, CutKind::EdgeCut};
    return out;
  }

  MultiGraph mg = multigraph_from(g);
  int best = g.degree(0) + 1;  // isolating vertex 0 always cuts deg(0) edges
  MinCut best_cut;
  for (int u = 1; u < g.vertex_count; ++u) {
    MinCut mc = min_cut_between(mg, 0, u, best - 1);
    if (!mc.truncated && mc.value < best) {
      best = mc.value;
      best_cut = std::move(mc);
    }
  }
  LambdaResult out;
  out.value = best;
  out.certificate = {best_cut.source_side, best_cut.cut_edges, best,
                     CutKind::EdgeCut};
  return out;
}

int vertex_connectivity(const Graph& g) {
  int n = g.vertex_count;
  if (n <= 1) return 0;
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;

  // v_in = 2v, v_out = 2v+1; all internal capacities 1 except the terminals.
  const int big = n;
  std::vector<int> candidates{0};
  for (int v : g.adjacency[0]) candidates.push_back(v);

  int best = n - 1;  // a non-complete graph has a cut of size <= n-2
  FlowNetwork net;
  for (int s : candidates) {
    for (int t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      net.init(2 * n);
      for (int v = 0; v < n; ++v)
        net.add_edge(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1, 0);
      for (const auto& [u, v] : g.edges()) {
        net.add_edge(2 * u + 1, 2 * v, big, 0);
        net.add_edge(2 * v + 1, 2 * u, big, 0);
      }
      auto flow = net.max_flow(2 * s + 1, 2 * t, best - 1);
      if (!flow.truncated && flow.value < best) best = flow.value;
    }
  }
  return best;
}

namespace {

struct EdgePair {
  Edge e, f;
};

// Contract e into the source and f into the sink, then min cut. `fragment`
// and (optionally) `far_fragment` receive the residual-minimal sides mapped
// back to original vertices, sorted.
int contracted_pair_cut(const Graph& g, const Edge& e, const Edge& f, int prune,
                        FlowNetwork& net, std::vector<int>& map, bool& truncated,
                        std::vector<int>* fragment, std::vector<int>* far_fragment) {
  int n = g.vertex_count;
  map.assign(n, -1);
  map[e.first] = 0;
  map[e.second] = 0;
  map[f.first] = 1;
  map[f.second] = 1;
  int next = 2;
  for (int v = 0; v < n; ++v)
    if (map[v] == -1) map[v] = next++;

  net.init(next);
  for (int u = 0; u < n; ++u)
    for (int v : g.adjacency[u]) {
      if (u >= v) continue;
      int a = map[u], b = map[v];
      if (a == b) continue;
      net.add_edge(a, b, 1, 1);
    }

  auto flow = net.max_flow(0, 1, prune);
  truncated = flow.truncated;
  if (truncated) return flow.value;

  if (fragment) {
    auto reach = net.reachable_from_source();
    fragment->clear();
    for (int v = 0; v < n; ++v)
      if (reach[map[v]]) fragment->push_back(v);
  }
  if (far_fragment) {
    auto reach = net.reaching_sink();
    far_fragment->clear();
    for (int v = 0; v < n; ++v)
      if (reach[map[v]]) far_fragment->push_back(v);
  }
  return flow.value;
}

std::vector<EdgePair> collect_pairs(const Graph& g, bool transitive) {
  auto edges = g.edges();
  auto disjoint = [](const Edge& a, const Edge& b) {
    return a.first != b.first && a.first != b.second && a.second != b.first &&
           a.second != b.second;
  };
  std::vector<EdgePair> pairs;
  if (transitive) {
    std::vector<Edge> at0;
    for (const auto& e : edges)
      if (e.first == 0 || e.second == 0) at0.push_back(e);
    for (const auto& e : at0)
      for (const auto& f : edges)
        if (disjoint(e, f)) pairs.push_back({e, f});
  } else {
    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = i + 1; j < edges.size(); ++j)
        if (disjoint(edges[i], edges[j])) pairs.push_back({edges[i], edges[j]});
  }
  return pairs;
}

struct PairCandidate {
  int value = std::numeric_limits<int>::max();
  std::vector<int> fragment;

  bool better_than(const PairCandidate& other) const {
    if (value != other.value) return value < other.value;
    return fragment < other.fragment;
  }
};

void atomic_min(std::atomic<int>& target, int value) {
  int cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace

LambdaPrimeResult restricted_edge_connectivity(const Graph& g,
                                               const LambdaPrimeOptions& opts) {
  LambdaPrimeResult out;
  if (!lambda_prime_defined(g)) return out;

  int xi = min_edge_degree(g);
  int initial = xi + 1;
  if (opts.prune_at < std::numeric_limits<int>::max())
    initial = std::min(initial, opts.prune_at + 1);

  auto pairs = collect_pairs(g, opts.use_vertex_transitivity);
  std::atomic<int> best{initial};

  int jobs = std::max(1, opts.jobs);
  std::vector<PairCandidate> local(static_cast<size_t>(jobs));

  // Every pair whose cut equals the final value completes (the shared bound
  // never drops below it), so the reduction below sees all minimizers no
  // matter how the pairs were scheduled.
  std::atomic<size_t> cursor{0};
  auto run_range = [&](int worker_id) {
    FlowNetwork wnet;
    std::vector<int> wmap;
    std::vector<int> wfragment;
    PairCandidate& mine = local[worker_id];
    for (;;) {
      size_t i = cursor.fetch_add(8);
      if (i >= pairs.size()) return;
      size_t end = std::min(pairs.size(), i + 8);
      for (size_t k = i; k < end; ++k) {
        int bound = best.load(std::memory_order_relaxed);
        bool truncated = false;
        int value = contracted_pair_cut(g, pairs[k].e, pairs[k].f, bound, wnet,
                                        wmap, truncated, &wfragment, nullptr);
        if (truncated || value >= initial) continue;
        atomic_min(best, value);
        PairCandidate cand{value, wfragment};
        if (cand.better_than(mine)) mine = std::move(cand);
      }
    }
  };

  if (jobs == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(run_range, i);
    for (auto& t : threads) t.join();
  }

  PairCandidate winner;
  for (int i = 0; i < jobs; ++i)
    if (local[i].better_than(winner)) winner = std::move(local[i]);

  if (winner.value == std::numeric_limits<int>::max()) {
    if (opts.prune_at < std::numeric_limits<int>::max())
      throw std::runtime_error(
          "restricted_edge_connectivity: no restricted cut within prune_at");
    throw std::logic_error("restricted_edge_connectivity: no cut found");
  }

  out.defined = true;
  out.value = winner.value;
  out.certificate = {winner.fragment, boundary_edges(g, winner.fragment),
                     winner.value, CutKind::RestrictedEdgeCut};
  return out;
}

int restricted_edge_connectivity_bruteforce(const Graph& g, int threshold) {
  int n = g.vertex_count;
  if (threshold > 25) threshold = 25;
  if (n < 4 || n > threshold)
    throw std::invalid_argument(
        "bruteforce lambda': order must be in [4, " + std::to_string(threshold) + "]");
  if (!is_connected(g) || is_star(g))
    throw std::invalid_argument("bruteforce lambda': undefined for this graph");

  std::vector<unsigned> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.adjacency[u]) adj[u] |= 1u << v;

  unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = -1;
  for (unsigned x = 1; x < full; ++x) {
    int size = __builtin_popcount(x);
    if (size < 2 || n - size < 2) continue;
    bool ok = true;
    int boundary = 0;
    for (int v = 0; v < n && ok; ++v) {
      unsigned side = (x >> v & 1) ? x : full & ~x;
      if (!(adj[v] & side)) ok = false;  // isolated after the cut
      if (x >> v & 1) boundary += __builtin_popcount(adj[v] & ~x & full);
    }
    if (!ok) continue;
    if (best < 0 || boundary < best) best = boundary;
  }
  if (best < 0)
    throw std::logic_error("bruteforce lambda': no restricted cut exists");
  return best;
}

namespace {

// Restrict a fragment to the component of its induced subgraph containing
// `anchor` (both endpoints of the contracted edge lie in one component).
std::vector<int> component_of(const Graph& g, const std::vector<int>& fragment,
                              int anchor) {
  std::vector<char> in(g.vertex_count, 0);
  for (int v : fragment) in[v] = 1;
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack{anchor}, comp;
  seen[anchor] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    comp.push_back(v);
    for (int w : g.adjacency[v])
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

struct AtomCandidate {
  std::vector<int> vertices;
  bool valid = false;

  bool better_than(const AtomCandidate& other) const {
    if (!valid) return false;
    if (!other.valid) return true;
    if (vertices.size() != other.vertices.size())
      return vertices.size() < other.vertices.size();
    return vertices < other.vertices;
  }
};

}  // namespace

AtomResult lambda_prime_atom(const Graph& g, const LambdaPrimeOptions& opts) {
  auto lp = restricted_edge_connectivity(g, opts);
  if (!lp.defined)
    throw std::invalid_argument("lambda_prime_atom: lambda' undefined");

  auto pairs = collect_pairs(g, opts.use_vertex_transitivity);
  int target = lp.value;
  int jobs = std::max(1, opts.jobs);
  std::vector<AtomCandidate> local(jobs);

  std::atomic<size_t> cursor{0};
  auto run_range = [&](int worker_id) {
    FlowNetwork wnet;
    std::vector<int> wmap, near_side, far_side;
    AtomCandidate& mine = local[worker_id];
    auto consider = [&](std::vector<int> side, int anchor) {
      auto comp = component_of(g, side, anchor);
      if (comp.size() < side.size()) side = std::move(comp);
      AtomCandidate cand{std::move(side), true};
      if (cand.better_than(mine)) mine = std::move(cand);
    };
    for (;;) {
      size_t i = cursor.fetch_add(8);
      if (i >= pairs.size()) return;
      size_t end = std::min(pairs.size(), i + 8);
      for (size_t k = i; k < end; ++k) {
        bool truncated = false;
        int value = contracted_pair_cut(g, pairs[k].e, pairs[k].f, target, wnet,
                                        wmap, truncated, &near_side, &far_side);
        if (truncated || value != target) continue;
        consider(near_side, pairs[k].e.first);
        consider(far_side, pairs[k].f.first);
      }
    }
  };

  if (jobs == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(run_range, i);
    for (auto& t : threads) t.join();
  }

  AtomCandidate winner;
  for (auto& c : local)
    if (c.better_than(winner)) winner = std::move(c);
  if (!winner.valid)
    throw std::logic_error("lambda_prime_atom: no minimizing fragment found");

  AtomResult out;
  out.lambda_prime = target;
  out.atom = winner.vertices;
  out.certificate = {out.atom, boundary_edges(g, out.atom), target,
                     CutKind::RestrictedEdgeCut};
  return out;
}

ConnectivityReport classify(const Graph& g, const LambdaPrimeOptions& opts) {
  if (g.vertex_count < 2 || !is_connected(g))
    throw std::invalid_argument("classify: need a connected graph on >= 2 vertices");
  ConnectivityReport r;
  r.delta = min_degree(g);
  r.xi = min_edge_degree(g);
  r.kappa = vertex_connectivity(g);
  auto lam = edge_connectivity(g);
  r.lambda = lam.value;
  r.lambda_certificate = lam.certificate;
  auto lp = restricted_edge_connectivity(g, opts);
  if (lp.defined) {
    r.lambda_prime = lp.value;
    r.lambda_prime_certificate = lp.certificate;
    r.super_lambda = lp.value > r.lambda;
    r.lambda_prime_optimal = lp.value == r.xi;
  }
  return r;
}

std::string report_violations(const Graph& g, const ConnectivityReport& r) {
  std::vector<std::string> bad;
  if (!(r.kappa <= r.lambda)) bad.push_back("kappa > lambda");
  if (!(r.lambda <= r.delta)) bad.push_back("lambda > delta");
  if (!validate_certificate(g, r.lambda_certificate))
    bad.push_back(std::string("lambda certificate: ") +
                  to_string(check_certificate(g, r.lambda_certificate)));
  if (r.lambda_certificate.claimed_value != r.lambda)
    bad.push_back("lambda certificate value mismatch");
  if (r.lambda_prime) {
    int lp = *r.lambda_prime;
    if (!(r.lambda <= lp)) bad.push_back("lambda > lambda'");
    if (!(lp <= r.xi)) bad.push_back("lambda' > xi");
    if (r.super_lambda != (lp > r.lambda)) bad.push_back("super-lambda flag wrong");
    if (r.lambda_prime_optimal != (lp == r.xi))
      bad.push_back("lambda'-optimal flag wrong");
    if (!r.lambda_prime_certificate) {
      bad.push_back("missing lambda' certificate");
    } else {
      if (!validate_certificate(g, *r.lambda_prime_certificate))
        bad.push_back(std::string("lambda' certificate: ") +
                      to_string(check_certificate(g, *r.lambda_prime_certificate)));
      if (r.lambda_prime_certificate->claimed_value != lp)
        bad.push_back("lambda' certificate value mismatch");
    }
  } else {
    if (r.super_lambda || r.lambda_prime_optimal)
      bad.push_back("flags set while lambda' undefined");
  }
  std::string out;
  for (const auto& b : bad) {
    if (!out.empty()) out += "; ";
    out += b;
  }
  return out;
}

}  // namespace lpl
