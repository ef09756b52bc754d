#include "lpl/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lpl {

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) return false;
  const auto& nb = adjacency[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

long Graph::edge_count() const {
  long twice = 0;
  for (const auto& nb : adjacency) twice += static_cast<long>(nb.size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(edge_count()));
  for (int u = 0; u < vertex_count; ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count == b.vertex_count && a.adjacency == b.adjacency;
}

Graph make_graph(int vertex_count, const std::vector<Edge>& edges,
                 DuplicateEdgePolicy policy) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.vertex_count = vertex_count;
  g.adjacency.assign(vertex_count, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    if (u == v)
      throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (int v = 0; v < vertex_count; ++v) {
    auto& nb = g.adjacency[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::unique(nb.begin(), nb.end());
    if (policy == DuplicateEdgePolicy::Reject && dup != nb.end())
      throw std::invalid_argument("duplicate edge rejected at vertex " +
                                  std::to_string(v));
    nb.erase(dup, nb.end());
  }
  return g;
}

int min_degree(const Graph& g) {
  if (g.vertex_count == 0) throw std::invalid_argument("min_degree: empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.vertex_count; ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  if (g.vertex_count == 0) throw std::invalid_argument("max_degree: empty graph");
  int best = 0;
  for (int v = 0; v < g.vertex_count; ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_edge_degree(const Graph& g) {
  int best = -1;
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v : g.adjacency[u])
      if (u < v) {
        int d = g.degree(u) + g.degree(v) - 2;
        if (best < 0 || d < best) best = d;
      }
  if (best < 0) throw std::invalid_argument("min_edge_degree: edgeless graph");
  return best;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.vertex_count == 0) return std::nullopt;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count; ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack;
  for (int start = 0; start < g.vertex_count; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adjacency[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count <= 1) return true;
  return components(g).size() == 1;
}

bool is_star(const Graph& g) {
  int n = g.vertex_count;
  if (n < 2) return false;
  if (g.edge_count() != n - 1) return false;
  return max_degree(g) == n - 1;
}

bool is_complete(const Graph& g) {
  int n = g.vertex_count;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count < 3) return false;
  return regular_degree(g) == 2 && is_connected(g);
}

bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v : g.adjacency[u]) {
      if (v <= u) continue;
      for (int w : g.adjacency[v])
        if (w > v && g.has_edge(u, w)) return true;
    }
  return false;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.vertex_count, -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count)
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (index[v] != -1)
      throw std::invalid_argument("induced_subgraph: repeated vertex");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (int v : vertices)
    for (int w : g.adjacency[v])
      if (index[w] != -1 && index[v] < index[w])
        edges.emplace_back(index[v], index[w]);
  return make_graph(static_cast<int>(vertices.size()), edges);
}

bool rotation_valid_for(const Graph& g, const RotationMap& rot,
                        std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(rot.table.size()) != g.vertex_count)
    return fail("rotation table size differs from vertex count");
  for (int x = 0; x < g.vertex_count; ++x) {
    if (rot.ports(x) != g.degree(x))
      return fail("port count at vertex " + std::to_string(x) +
                  " differs from its degree");
    std::vector<int> targets;
    for (int i = 0; i < rot.ports(x); ++i) {
      auto [y, j] = rot.at(x, i);
      if (y < 0 || y >= g.vertex_count || !g.has_edge(x, y))
        return fail("port (" + std::to_string(x) + "," + std::to_string(i) +
                    ") does not map to a neighbor");
      if (j < 0 || j >= rot.ports(y))
        return fail("port (" + std::to_string(x) + "," + std::to_string(i) +
                    ") maps to an invalid far port");
      if (rot.at(y, j) != PortTarget{x, i})
        return fail("involution broken at (" + std::to_string(x) + "," +
                     std::to_string(i) + ")");
      targets.push_back(y);
    }
    std::sort(targets.begin(), targets.end());
    if (targets != g.adjacency[x])
      return fail("ports at vertex " + std::to_string(x) +
                  " do not enumerate its incident edges");
  }
  return true;
}

}  // namespace lpl
