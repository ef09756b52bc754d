#include "lpl/multigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace lpl {

long MultiGraph::capacity_between(int u, int v) const {
  for (auto [w, c] : adjacency[u])
    if (w == v) return c;
  return 0;
}

long MultiGraph::total_capacity() const {
  long twice = 0;
  for (const auto& nb : adjacency)
    for (auto [w, c] : nb) twice += c;
  return twice / 2;
}

MultiGraph multigraph_from(const Graph& g) {
  MultiGraph m;
  m.vertex_count = g.vertex_count;
  m.adjacency.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v)
    for (int w : g.adjacency[v]) m.adjacency[v].emplace_back(w, 1);
  return m;
}

Contraction contract(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> map(g.vertex_count, -1);
  int next = 0;
  for (const auto& block : blocks) {
    for (int v : block) {
      if (v < 0 || v >= g.vertex_count)
        throw std::invalid_argument("contract: vertex out of range: " +
                                    std::to_string(v));
      if (map[v] != -1)
        throw std::invalid_argument("contract: overlapping blocks at vertex " +
                                    std::to_string(v));
      map[v] = next;
    }
    ++next;
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (map[v] == -1) map[v] = next++;

  std::map<Edge, int> caps;
  for (int u = 0; u < g.vertex_count; ++u)
    for (int v : g.adjacency[u]) {
      if (u >= v) continue;
      int a = map[u], b = map[v];
      if (a == b) continue;  // internal to a block
      caps[make_edge(a, b)] += 1;
    }

  Contraction out;
  out.vertex_map = map;
  out.graph.vertex_count = next;
  out.graph.adjacency.resize(next);
  for (const auto& [e, c] : caps) {
    out.graph.adjacency[e.first].emplace_back(e.second, c);
    out.graph.adjacency[e.second].emplace_back(e.first, c);
  }
  for (auto& nb : out.graph.adjacency) std::sort(nb.begin(), nb.end());
  return out;
}

}  // namespace lpl
