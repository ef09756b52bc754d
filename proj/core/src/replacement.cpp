#include "lpl/replacement.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lpl {

namespace {

RotationMap sorted_neighbors_rotation(const Graph& g) {
  RotationMap rot;
  rot.table.resize(g.vertex_count);
  for (int x = 0; x < g.vertex_count; ++x) {
    rot.table[x].resize(g.degree(x));
    for (int i = 0; i < g.degree(x); ++i) {
      int y = g.adjacency[x][i];
      auto& ny = g.adjacency[y];
      int j = static_cast<int>(std::lower_bound(ny.begin(), ny.end(), x) -
                               ny.begin());
      rot.table[x][i] = {y, j};
    }
  }
  return rot;
}

RotationMap hypercube_rotation(const Graph& g) {
  int n = 0;
  while ((1 << n) < g.vertex_count) ++n;
  if ((1 << n) != g.vertex_count || regular_degree(g) != n)
    throw std::invalid_argument("hypercube rotation: not a hypercube");
  for (int v = 0; v < g.vertex_count; ++v)
    for (int b = 0; b < n; ++b)
      if (!g.has_edge(v, v ^ (1 << b)))
        throw std::invalid_argument("hypercube rotation: not a hypercube");
  RotationMap rot;
  rot.table.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    rot.table[v].resize(n);
    for (int b = 0; b < n; ++b) rot.table[v][b] = {v ^ (1 << b), b};
  }
  return rot;
}

RotationMap circulant_rotation(const Graph& g) {
  int n = g.vertex_count;
  if (n < 3 || !regular_degree(g))
    throw std::invalid_argument("circulant rotation: not a circulant");
  std::vector<int> gens;
  for (int d : g.adjacency[0]) {
    int s = std::min(d, n - d);
    gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // consistency: i ~ j exactly when their difference matches a generator
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = std::min((j - i) % n, (i - j + n) % n);
      bool expect = std::binary_search(gens.begin(), gens.end(), d);
      if (g.has_edge(i, j) != expect)
        throw std::invalid_argument("circulant rotation: not a circulant");
    }
  RotationMap rot;
  rot.table.resize(n);
  int k = static_cast<int>(gens.size());
  bool half = (n % 2 == 0) && gens.back() == n / 2;
  int ports = half ? 2 * k - 1 : 2 * k;
  for (int i = 0; i < n; ++i) rot.table[i].resize(ports);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      int s = gens[t];
      if (half && t == k - 1) {
        rot.table[i][2 * t] = {(i + s) % n, 2 * t};
      } else {
        rot.table[i][2 * t] = {(i + s) % n, 2 * t + 1};
        rot.table[i][2 * t + 1] = {(i - s + n) % n, 2 * t};
      }
    }
  return rot;
}

}  // namespace

RotationMap default_rotation_map(const Graph& g, RotationStrategy strategy) {
  if (!regular_degree(g))
    throw std::invalid_argument("default_rotation_map: graph is not regular");
  switch (strategy) {
    case RotationStrategy::SortedNeighbors: return sorted_neighbors_rotation(g);
    case RotationStrategy::HypercubeDims: return hypercube_rotation(g);
    case RotationStrategy::CirculantGens: return circulant_rotation(g);
  }
  throw std::invalid_argument("default_rotation_map: unknown strategy");
}

ReplacementProduct replacement_product(const Graph& g1, const RotationMap& rot,
                                       const Graph& g2) {
  auto d1 = regular_degree(g1);
  auto d2 = regular_degree(g2);
  if (!d1) throw std::invalid_argument("replacement_product: g1 not regular");
  if (!d2) throw std::invalid_argument("replacement_product: g2 not regular");
  if (!is_connected(g1))
    throw std::invalid_argument("replacement_product: g1 not connected");
  if (g2.vertex_count != *d1)
    throw std::invalid_argument(
        "replacement_product: g2 must have exactly " + std::to_string(*d1) +
        " vertices, got " + std::to_string(g2.vertex_count));
  std::string why;
  if (!rotation_valid_for(g1, rot, &why))
    throw std::invalid_argument("replacement_product: invalid rotation map: " + why);

  int n = g1.vertex_count;
  int delta1 = *d1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * delta1 * (*d2 + 1) / 2);
  for (int x = 0; x < n; ++x) {
    for (const auto& [i, j] : g2.edges())
      edges.emplace_back(x * delta1 + i, x * delta1 + j);
    for (int i = 0; i < delta1; ++i) {
      auto [y, j] = rot.at(x, i);
      if (std::pair(x, i) < std::pair(y, j))
        edges.push_back(make_edge(x * delta1 + i, y * delta1 + j));
    }
  }

  ReplacementProduct out;
  out.graph = make_graph(n * delta1, edges, DuplicateEdgePolicy::Reject);
  out.blocks.resize(n);
  for (int x = 0; x < n; ++x) {
    out.blocks[x].resize(delta1);
    for (int i = 0; i < delta1; ++i) out.blocks[x][i] = x * delta1 + i;
  }
  return out;
}

long cross_edge_count(const Graph& g1, const RotationMap& rot, const Graph& g2) {
  auto product = replacement_product(g1, rot, g2);
  int delta1 = g2.vertex_count;
  long count = 0;
  for (const auto& [u, v] : product.graph.edges())
    if (u / delta1 != v / delta1) ++count;
  return count;
}

CorrespondenceResult check_replacement_correspondence(
    const Group& a, const std::vector<int>& s_a, const Group& b,
    const std::vector<int>& s_b, const Action& act, int x) {
  SdpCayley built = build_sdp_cayley_spec(a, s_a, b, s_b, act, x);

  CorrespondenceResult out;
  out.cayley = cayley_graph(built.spec);

  Graph ga = cayley_graph({a, s_a});
  Graph gb = cayley_graph({b, s_b});

  // Ports are indexed by elements of B; port i at vertex y leads to
  // y * phi_i(x) on the same port. Involution holds because x = x^-1.
  RotationMap induced;
  induced.table.resize(ga.vertex_count);
  for (int y = 0; y < ga.vertex_count; ++y) {
    induced.table[y].resize(b.order);
    for (int i = 0; i < b.order; ++i)
      induced.table[y][i] = {a.mul(y, act.apply(i, x)), i};
  }
  std::string why;
  if (!rotation_valid_for(ga, induced, &why))
    throw std::logic_error("induced rotation map invalid: " + why);
  out.induced = induced;

  out.product = replacement_product(ga, induced, gb);
  auto cayley_edges = out.cayley.edges();
  auto product_edges = out.product.graph.edges();
  if (cayley_edges == product_edges) {
    out.equal = true;
  } else {
    out.equal = false;
    size_t upto = std::min(cayley_edges.size(), product_edges.size());
    for (size_t i = 0; i < upto; ++i)
      if (cayley_edges[i] != product_edges[i]) {
        out.mismatch = cayley_edges[i] < product_edges[i] ? cayley_edges[i]
                                                          : product_edges[i];
        break;
      }
    if (!out.mismatch && upto < std::max(cayley_edges.size(), product_edges.size()))
      out.mismatch = cayley_edges.size() > product_edges.size()
                         ? cayley_edges[upto]
                         : product_edges[upto];
  }
  return out;
}

}  // namespace lpl
