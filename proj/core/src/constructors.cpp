#include "lpl/constructors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace lpl {

Graph circulant(int n, const std::vector<int>& gens) {
  if (n < 3) throw std::invalid_argument("circulant: n must be >= 3");
  std::vector<int> s(gens.begin(), gens.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw std::invalid_argument("circulant: empty generator set");
  for (int g : s)
    if (g < 1 || g > n / 2)
      throw std::invalid_argument("circulant: generator " + std::to_string(g) +
                                  " outside {1.." + std::to_string(n / 2) + "}");

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int g : s) edges.push_back(make_edge(i, (i + g) % n));
  Graph graph = make_graph(n, edges);

  // Port labelling: generator index t owns ports 2t (forward) and 2t+1
  // (backward); a generator equal to n/2 owns only port 2t.
  RotationMap rot;
  rot.table.resize(n);
  int k = static_cast<int>(s.size());
  bool half = (n % 2 == 0) && s.back() == n / 2;
  int ports = half ? 2 * k - 1 : 2 * k;
  for (int i = 0; i < n; ++i) rot.table[i].resize(ports);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      int g = s[t];
      if (half && t == k - 1) {
        rot.table[i][2 * t] = {(i + g) % n, 2 * t};
      } else {
        rot.table[i][2 * t] = {(i + g) % n, 2 * t + 1};
        rot.table[i][2 * t + 1] = {(i - g + n) % n, 2 * t};
      }
    }
  graph.rotation = std::move(rot);
  return graph;
}

Graph hypercube(int n) {
  if (n < 1) throw std::invalid_argument("hypercube: n must be >= 1");
  if (n > 24) throw std::invalid_argument("hypercube: n too large");
  int size = 1 << n;
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(size) * n / 2);
  for (int v = 0; v < size; ++v)
    for (int b = 0; b < n; ++b)
      if (!(v >> b & 1)) edges.emplace_back(v, v | (1 << b));
  Graph graph = make_graph(size, edges);

  RotationMap rot;
  rot.table.resize(size);
  for (int v = 0; v < size; ++v) {
    rot.table[v].resize(n);
    for (int b = 0; b < n; ++b) rot.table[v][b] = {v ^ (1 << b), b};
  }
  graph.rotation = std::move(rot);
  return graph;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return make_graph(n, edges);
}

Graph star(int n) {
  if (n < 2) throw std::invalid_argument("star: n must be >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return make_graph(n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n <= 0 || d < 0) throw std::invalid_argument("random_regular: bad parameters");
  if (d >= n) throw std::invalid_argument("random_regular: d must be < n");
  if ((static_cast<long>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular: n*d must be even");
  if (d == 0) return make_graph(n, {});

  std::mt19937_64 rng(seed);
  const int restarts = 200000;
  std::vector<int> stubs(static_cast<size_t>(n) * d);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    for (int i = 0; i < n * d; ++i) stubs[i] = i / d;
    // Fisher-Yates with an explicit modulo draw so the sequence is stable
    // across standard library implementations.
    for (int i = n * d - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::set<Edge> seen;
    bool ok = true;
    for (int i = 0; i < n * d && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || !seen.insert(make_edge(u, v)).second) ok = false;
    }
    if (!ok) continue;
    return make_graph(n, std::vector<Edge>(seen.begin(), seen.end()));
  }
  throw std::runtime_error(
      "random_regular: pairing rejected too often for n=" + std::to_string(n) +
      " d=" + std::to_string(d) + "; try different parameters or seed");
}

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::Circulant: return circulant(spec.n, spec.gens);
    case FamilySpec::Kind::Hypercube: return hypercube(spec.n);
    case FamilySpec::Kind::Complete: return complete(spec.n);
    case FamilySpec::Kind::Cycle: return cycle(spec.n);
    case FamilySpec::Kind::Star: return star(spec.n);
    case FamilySpec::Kind::RandomRegular:
      return random_regular(spec.n, spec.d, spec.seed);
  }
  throw std::invalid_argument("build_family: unknown kind");
}

}  // namespace lpl
